use std::fs;
use std::path::Path;

use hopfmotives_core::catalog::Catalog;

use crate::error::CliError;
use crate::schema::parse_entry;

pub const CATALOG_DIR_VAR: &str = "HOPFMOTIVES_CATALOG_DIR";

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    read(path)
}

/// The built-in catalog, or the entries of `$HOPFMOTIVES_CATALOG_DIR` when
/// that variable is set and non-empty.
pub fn load_catalog() -> Result<Catalog, CliError> {
    match std::env::var_os(CATALOG_DIR_VAR) {
        Some(dir) if !dir.is_empty() => load_catalog_dir(Path::new(&dir)),
        _ => Ok(Catalog::builtin()?),
    }
}

/// Every `*.json` file of `dir`, in file-name order, each holding one entry.
pub fn load_catalog_dir(dir: &Path) -> Result<Catalog, CliError> {
    let listing = fs::read_dir(dir).map_err(|source| CliError::Io {
        path: dir.display().to_string(),
        source,
    })?;
    let mut paths = Vec::new();
    for item in listing {
        let item = item.map_err(|source| CliError::Io {
            path: dir.display().to_string(),
            source,
        })?;
        let path = item.path();
        if path.extension().is_some_and(|e| e == "json") {
            paths.push(path);
        }
    }
    paths.sort();
    let mut cat = Catalog::empty();
    for path in paths {
        let name = path.display().to_string();
        let entry = parse_entry(&read(&path)?).map_err(|e| prefix(&name, e))?;
        if cat.get(&entry.key).is_ok() {
            return Err(CliError::Invalid(format!("{name}: duplicate catalog key {}", entry.key)));
        }
        cat.insert(entry).map_err(|e| prefix(&name, e.into()))?;
    }
    Ok(cat)
}

fn prefix(name: &str, e: CliError) -> CliError {
    match e {
        CliError::Schema { path, line, message } => CliError::Schema {
            path: format!("{name}: {path}"),
            line,
            message,
        },
        CliError::Core(hopfmotives_core::Error::CatalogVerification { key, detail }) => {
            CliError::Core(hopfmotives_core::Error::CatalogVerification {
                key: format!("{key} ({name})"),
                detail,
            })
        }
        other => CliError::Invalid(format!("{name}: {other}")),
    }
}
