//! Fundamental degrees of the finite Weyl groups and a brute-force
//! length enumeration used to check them.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::PoincarePoly;

/// Splits `E8`, `b3`, `D4` into the family letter and rank.
pub fn parse_type(name: &str) -> Result<(char, u32)> {
    let name = name.trim();
    let mut chars = name.chars();
    let family = chars
        .next()
        .map(|c| c.to_ascii_uppercase())
        .ok_or_else(|| Error::UnsupportedType(String::from(name)))?;
    let rank: u32 = chars
        .as_str()
        .parse()
        .map_err(|_| Error::UnsupportedType(String::from(name)))?;
    let ok = match family {
        'A' => rank >= 1,
        'B' | 'C' => rank >= 2,
        'D' => rank >= 3,
        'E' => (6..=8).contains(&rank),
        'F' => rank == 4,
        'G' => rank == 2,
        _ => false,
    };
    if ok {
        Ok((family, rank))
    } else {
        Err(Error::UnsupportedType(String::from(name)))
    }
}

pub fn fundamental_degrees(name: &str) -> Result<Vec<u32>> {
    let (family, n) = parse_type(name)?;
    Ok(match family {
        'A' => (2..=n + 1).collect(),
        'B' | 'C' => (1..=n).map(|i| 2 * i).collect(),
        'D' => {
            let mut d: Vec<u32> = (1..n).map(|i| 2 * i).collect();
            d.push(n);
            d.sort_unstable();
            d
        }
        'E' => match n {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
        },
        'F' => vec![2, 6, 8, 12],
        _ => vec![2, 6],
    })
}

/// `Π (t^d - 1)/(t - 1)` over the fundamental degrees.
pub fn weyl_poincare(name: &str) -> Result<PoincarePoly> {
    Ok(PoincarePoly::from_fundamental_degrees(&fundamental_degrees(name)?))
}

pub fn weyl_order(name: &str) -> Result<u64> {
    Ok(fundamental_degrees(name)?.iter().map(|&d| d as u64).product())
}

/// Cartan matrix `a_ij = <α_i^∨, α_j>` in Bourbaki numbering.
pub fn cartan_matrix(name: &str) -> Result<Vec<Vec<i64>>> {
    let (family, n) = parse_type(name)?;
    let n = n as usize;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match family {
        'A' | 'B' | 'C' => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        'D' => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        'E' => {
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
        'F' => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
        }
        _ => link(0, 1),
    }
    match family {
        'B' => a[n - 1][n - 2] = -2,
        'C' => a[n - 2][n - 1] = -2,
        'F' => a[2][1] = -2,
        'G' => a[1][0] = -3,
        _ => {}
    }
    Ok(a)
}

/// Length generating function of `W` by breadth-first search over the orbit
/// of `ρ` under simple reflections; the orbit is in bijection with `W` and
/// the search depth of a weight is the length of the element reaching it.
pub fn weyl_poincare_bruteforce(name: &str, limit: usize) -> Result<PoincarePoly> {
    let a = cartan_matrix(name)?;
    let n = a.len();
    let start = vec![1i64; n];
    let mut depth: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    depth.insert(start.clone(), 0);
    let mut queue = VecDeque::from([start]);
    let mut counts: Vec<u64> = vec![1];
    while let Some(w) = queue.pop_front() {
        let d = depth[&w];
        for i in 0..n {
            // s_i(λ) = λ - λ_i α_i, where α_i has coordinates a_ij.
            let next: Vec<i64> = (0..n).map(|j| w[j] - w[i] * a[i][j]).collect();
            if depth.contains_key(&next) {
                continue;
            }
            if depth.len() >= limit {
                return Err(Error::BoundExceeded {
                    what: format!("Weyl group of {name}"),
                    bound: limit as u64,
                });
            }
            depth.insert(next.clone(), d + 1);
            if counts.len() <= d + 1 {
                counts.push(0);
            }
            counts[d + 1] += 1;
            queue.push_back(next);
        }
    }
    Ok(PoincarePoly::from_coeffs(counts))
}

/// Types covered by the table up to the given rank.
pub fn table_types(max_rank: u32) -> Vec<String> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        out.push(format!("A{n}"));
    }
    for n in 2..=max_rank {
        out.push(format!("B{n}"));
    }
    for n in 2..=max_rank {
        out.push(format!("C{n}"));
    }
    for n in 4..=max_rank {
        out.push(format!("D{n}"));
    }
    for n in 6..=max_rank.min(8) {
        out.push(format!("E{n}"));
    }
    if max_rank >= 4 {
        out.push(String::from("F4"));
    }
    if max_rank >= 2 {
        out.push(String::from("G2"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert_eq!(weyl_poincare("A1").unwrap().coeffs(), &[1, 1]);
        assert_eq!(weyl_poincare("A2").unwrap().coeffs(), &[1, 2, 2, 1]);
        assert_eq!(weyl_poincare_bruteforce("A2", 100).unwrap().coeffs(), &[1, 2, 2, 1]);
        let g2 = PoincarePoly::geometric(1, 2).mul(&PoincarePoly::geometric(1, 6));
        assert_eq!(weyl_poincare_bruteforce("G2", 100).unwrap(), g2);
        assert_eq!(weyl_order("E8").unwrap(), 696_729_600);
        assert!(weyl_poincare("H3").is_err());
        assert!(weyl_poincare("E9").is_err());
    }

    #[test]
    fn e6_matches_bruteforce() {
        assert_eq!(weyl_poincare_bruteforce("E6", 60_000).unwrap(), weyl_poincare("E6").unwrap());
    }
}
