//! Small named structures, plus every residuated lattice on a few
//! non-chain lattices.

use super::{chain_order, derive_residuals, enumerate_models, FiniteResLat};

fn build(leq: Vec<Vec<bool>>, mul: Vec<Vec<usize>>, unit: usize, names: &[&str]) -> FiniteResLat {
    derive_residuals(leq, mul, unit).expect("library tables are residuated").with_names(names.iter().copied())
}

fn order_from_covers(n: usize, covers: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut leq: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| a == b).collect()).collect();
    for &(a, b) in covers {
        leq[a][b] = true;
    }
    for k in 0..n {
        for a in 0..n {
            for b in 0..n {
                if leq[a][k] && leq[k][b] {
                    leq[a][b] = true;
                }
            }
        }
    }
    leq
}

fn meet_table(leq: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = leq.len();
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let lower: Vec<usize> = (0..n).filter(|&c| leq[c][a] && leq[c][b]).collect();
                    *lower.iter().find(|&&g| lower.iter().all(|&d| leq[d][g])).expect("lattice")
                })
                .collect()
        })
        .collect()
}

/// `0 < a < e`, product = min.
pub fn godel3() -> FiniteResLat {
    build(chain_order(3), vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 2]], 2, &["0", "a", "e"])
}

/// `0 < a < e`, `a·a = 0`.
pub fn lukasiewicz3() -> FiniteResLat {
    build(chain_order(3), vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 2]], 2, &["0", "a", "e"])
}

/// `0 < e < t`, `t·t = t`, `0` absorbing.
pub fn sugihara3() -> FiniteResLat {
    build(chain_order(3), vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]], 1, &["0", "e", "t"])
}

/// `0 < a, b < c < e` with `a`, `b` incomparable, product = meet.
pub fn heyting5() -> FiniteResLat {
    let leq = order_from_covers(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)]);
    let mul = meet_table(&leq);
    build(leq, mul, 4, &["0", "a", "b", "c", "e"])
}

/// The four-element Boolean algebra `0 < a, b < e`, product = meet.
pub fn boolean4() -> FiniteResLat {
    let leq = square_order();
    let mul = meet_table(&leq);
    build(leq, mul, 3, &["0", "a", "b", "e"])
}

pub fn trivial1() -> FiniteResLat {
    build(chain_order(1), vec![vec![0]], 0, &["e"])
}

/// `0 < a, b < 1`.
pub fn square_order() -> Vec<Vec<bool>> {
    order_from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)])
}

/// `0 < a, b, c < 1`.
pub fn m3_order() -> Vec<Vec<bool>> {
    order_from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
}

/// `0 < a < c < 1`, `0 < b < 1`.
pub fn n5_order() -> Vec<Vec<bool>> {
    order_from_covers(5, &[(0, 1), (1, 3), (0, 2), (2, 4), (3, 4)])
}

/// Looks up one of the named structures.
pub fn by_name(name: &str) -> Option<FiniteResLat> {
    Some(match name {
        "godel3" => godel3(),
        "lukasiewicz3" => lukasiewicz3(),
        "sugihara3" => sugihara3(),
        "heyting5" => heyting5(),
        "boolean4" => boolean4(),
        "trivial1" => trivial1(),
        _ => return None,
    })
}

pub const NAMES: [&str; 6] = ["godel3", "lukasiewicz3", "sugihara3", "heyting5", "boolean4", "trivial1"];

/// Named structures, a few direct products, and every residuated lattice on
/// the square, on `M3` and on `N5`.
pub fn hand_built() -> Vec<(String, FiniteResLat)> {
    let mut out: Vec<(String, FiniteResLat)> =
        NAMES.iter().map(|&n| (n.to_string(), by_name(n).expect("registered"))).collect();
    out.push(("godel3×lukasiewicz3".into(), godel3().product(&lukasiewicz3())));
    out.push(("sugihara3×godel3".into(), sugihara3().product(&godel3())));
    out.push(("lukasiewicz3×sugihara3".into(), lukasiewicz3().product(&sugihara3())));
    out.push(("heyting5×sugihara3".into(), heyting5().product(&sugihara3())));
    for (lattice, leq) in [("square", square_order()), ("M3", m3_order()), ("N5", n5_order())] {
        let models = enumerate_models(&leq, &[]).expect("lattice orders");
        for (i, s) in models.into_iter().enumerate() {
            out.push((format!("{lattice}#{i}"), s));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::validate_axioms;

    #[test]
    fn everything_validates() {
        for (name, s) in hand_built() {
            assert!(validate_axioms(&s).is_ok(), "{name}");
        }
    }

    #[test]
    fn non_chain_lattices_carry_models() {
        let all = hand_built();
        for prefix in ["square#", "M3#", "N5#"] {
            assert!(all.iter().any(|(n, _)| n.starts_with(prefix)), "{prefix}");
        }
    }

    #[test]
    fn heyting_layout() {
        let h = heyting5();
        assert_eq!(h.ldiv(1, 2), 2);
        assert_eq!(h.ldiv(2, 1), 1);
        assert_eq!(h.join(1, 2), 3);
    }
}
