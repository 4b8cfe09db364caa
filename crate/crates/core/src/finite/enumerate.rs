use rayon::prelude::*;

use super::{chain_order, check_partial_order, check_square, lattice_tables, check_named_property, derive_residuals, FiniteResLat, NamedProperty, StructureError};

pub const DEFAULT_ENUMERATION_CAP: usize = 6;

struct Search<'a> {
    leq: &'a [Vec<bool>],
    cells: Vec<(usize, usize)>,
    mul: Vec<Vec<Option<usize>>>,
    found: Vec<Vec<Vec<usize>>>,
}

impl Search<'_> {
    fn monotone_with(&self, i: usize, j: usize, v: usize) -> bool {
        let n = self.leq.len();
        for p in 0..n {
            for q in 0..n {
                let Some(w) = self.mul[p][q] else { continue };
                if self.leq[p][i] && self.leq[q][j] && !self.leq[w][v] {
                    return false;
                }
                if self.leq[i][p] && self.leq[j][q] && !self.leq[v][w] {
                    return false;
                }
            }
        }
        true
    }

    /// Associativity on every triple whose four products are already known.
    fn associative_so_far(&self) -> bool {
        let n = self.leq.len();
        let get = |a: usize, b: usize| self.mul[a][b];
        (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| match (get(a, b), get(b, c)) {
                    (Some(ab), Some(bc)) => match (get(ab, c), get(a, bc)) {
                        (Some(l), Some(r)) => l == r,
                        _ => true,
                    },
                    _ => true,
                })
            })
        })
    }

    fn run(&mut self, k: usize) {
        if k == self.cells.len() {
            let table: Vec<Vec<usize>> =
                self.mul.iter().map(|row| row.iter().map(|v| v.expect("filled")).collect()).collect();
            self.found.push(table);
            return;
        }
        let (i, j) = self.cells[k];
        for v in 0..self.leq.len() {
            if !self.monotone_with(i, j, v) {
                continue;
            }
            self.mul[i][j] = Some(v);
            if self.associative_so_far() {
                self.run(k + 1);
            }
            self.mul[i][j] = None;
        }
    }
}

/// All multiplication tables with the given unit that are monotone, keep the
/// bottom absorbing and pass the partial associativity filter, in row-major
/// lexicographic order.
fn candidate_tables(leq: &[Vec<bool>], unit: usize, bottom: usize) -> Vec<Vec<Vec<usize>>> {
    let n = leq.len();
    let mut mul = vec![vec![None; n]; n];
    for a in 0..n {
        mul[unit][a] = Some(a);
        mul[a][unit] = Some(a);
    }
    if n > 1 {
        for a in 0..n {
            mul[bottom][a] = Some(bottom);
            mul[a][bottom] = Some(bottom);
        }
    }
    let cells = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| mul[i][j].is_none()).collect();
    let mut search = Search { leq, cells, mul, found: Vec::new() };
    search.run(0);
    search.found
}

fn satisfies_all(s: &FiniteResLat, constraints: &[NamedProperty]) -> bool {
    constraints.iter().all(|&p| check_named_property(s, p).map(|v| v.holds()).unwrap_or(false))
}

/// Every residuated lattice on the given lattice order satisfying all
/// `constraints`. Ordered by unit index, then by multiplication table in
/// row-major lexicographic order.
pub fn enumerate_models(leq: &[Vec<bool>], constraints: &[NamedProperty]) -> Result<Vec<FiniteResLat>, StructureError> {
    let n = leq.len();
    if n == 0 {
        return Err(StructureError::EmptyCarrier);
    }
    check_square(leq, n, "order")?;
    check_partial_order(leq)?;
    lattice_tables(leq)?;
    let bottom = (0..n).find(|&b| (0..n).all(|c| leq[b][c])).expect("lattices have a bottom");
    let units: Vec<usize> = (0..n).filter(|&u| n == 1 || u != bottom).collect();
    let per_unit: Vec<Vec<FiniteResLat>> = units
        .par_iter()
        .map(|&unit| {
            candidate_tables(leq, unit, bottom)
                .into_iter()
                .filter_map(|mul| derive_residuals(leq.to_vec(), mul, unit).ok())
                .filter(|s| satisfies_all(s, constraints))
                .collect()
        })
        .collect();
    Ok(per_unit.into_iter().flatten().collect())
}

/// [`enumerate_models`] on the `n`-element chain, refusing `n > cap`.
pub fn enumerate_chain_models(
    n: usize,
    constraints: &[NamedProperty],
    cap: usize,
) -> Result<Vec<FiniteResLat>, StructureError> {
    if n > cap {
        return Err(StructureError::TooLarge { size: n, cap });
    }
    enumerate_models(&chain_order(n), constraints)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::library::{godel3, lukasiewicz3};

    #[test]
    fn integral_three_chains() {
        let models = enumerate_chain_models(3, &[NamedProperty::Integral], DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(models.len(), 2);
        let tables: Vec<_> = models.iter().map(|s| s.mul_table().to_vec()).collect();
        assert!(tables.contains(&godel3().mul_table().to_vec()));
        assert!(tables.contains(&lukasiewicz3().mul_table().to_vec()));
    }

    #[test]
    fn singleton() {
        assert_eq!(enumerate_chain_models(1, &[], DEFAULT_ENUMERATION_CAP).unwrap().len(), 1);
    }

    #[test]
    fn cap() {
        assert_eq!(
            enumerate_chain_models(7, &[], DEFAULT_ENUMERATION_CAP).unwrap_err(),
            StructureError::TooLarge { size: 7, cap: 6 }
        );
    }

    #[test]
    fn lpl3_with_ldiv_self_is_distributive() {
        let models =
            enumerate_chain_models(4, &[NamedProperty::Lpl3, NamedProperty::LdivSelf], DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(!models.is_empty());
        for s in &models {
            assert!(check_named_property(s, NamedProperty::Distributive).unwrap().holds());
        }
    }

    #[test]
    fn sugihara_appears_with_free_unit() {
        let models = enumerate_chain_models(3, &[], DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(models.iter().any(|s| !s.is_integral()));
        assert!(models.windows(2).all(|w| (w[0].unit(), w[0].mul_table()) < (w[1].unit(), w[1].mul_table())));
    }
}
