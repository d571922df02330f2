//! Exact solving of homogeneous linear systems by sparse elimination.

use std::collections::BTreeMap;

use crate::error::{check_index, Error, Result};
use crate::scalar::Scalar;
use crate::tensor::Tensor;

/// `Σ coeff·x_k = 0`, stored sparsely by 0-based unknown position.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearEquation {
    terms: Vec<(usize, Scalar)>,
}

impl LinearEquation {
    /// Builds from `(unknown, coefficient)` pairs with 1-based unknowns; repeated unknowns are summed.
    pub fn new(unknowns: usize, terms: impl IntoIterator<Item = (usize, Scalar)>) -> Result<Self> {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (k, c) in terms {
            check_index(k, unknowns)?;
            *acc.entry(k - 1).or_insert_with(Scalar::zero) += &c;
        }
        Ok(LinearEquation { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    pub fn dense(coeffs: &[Scalar]) -> Self {
        LinearEquation {
            terms: coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value of the left-hand side at `x`.
    pub fn evaluate(&self, x: &[Scalar]) -> Scalar {
        self.terms.iter().map(|(k, c)| c * &x[*k]).sum()
    }

    /// Terms as 1-based `(unknown, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.terms.iter().map(|(k, c)| (k + 1, c))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSolveResult {
    pub unknowns: usize,
    pub rank: usize,
    /// Order-1 tensors spanning the solution space.
    pub kernel_basis: Vec<Tensor>,
}

impl LinearSolveResult {
    pub fn kernel_dim(&self) -> usize {
        self.kernel_basis.len()
    }
}

type Row = Vec<(usize, Scalar)>;

/// `row - f * pivot`, both sorted by column.
fn sub_scaled(row: &Row, f: &Scalar, pivot: &Row) -> Row {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut a, mut b) = (0, 0);
    while a < row.len() || b < pivot.len() {
        let ca = row.get(a).map_or(usize::MAX, |t| t.0);
        let cb = pivot.get(b).map_or(usize::MAX, |t| t.0);
        if ca < cb {
            out.push(row[a].clone());
            a += 1;
        } else if cb < ca {
            out.push((cb, -(f * &pivot[b].1)));
            b += 1;
        } else {
            let v = &row[a].1 - &(f * &pivot[b].1);
            if !v.is_zero() {
                out.push((ca, v));
            }
            a += 1;
            b += 1;
        }
    }
    out
}

/// Exact Gaussian elimination over the Gaussian rationals.
pub fn solve_linear(unknowns: usize, system: &[LinearEquation]) -> Result<LinearSolveResult> {
    if unknowns == 0 {
        return Err(Error::InvalidArgument("system without unknowns".into()));
    }
    // pivot column -> row normalized so that its leading coefficient is 1
    let mut pivots: BTreeMap<usize, Row> = BTreeMap::new();
    for eq in system {
        if let Some((k, _)) = eq.terms.iter().find(|(k, _)| *k >= unknowns) {
            return Err(Error::IndexOutOfRange { index: k + 1, bound: unknowns });
        }
        let mut row = eq.terms.clone();
        let mut from = 0;
        while let Some(pos) = row[from..].iter().position(|(c, _)| pivots.contains_key(c)) {
            let (col, f) = row[from + pos].clone();
            from += pos;
            row = sub_scaled(&row, &f, &pivots[&col]);
            // entries before `from` are untouched and not pivot columns
        }
        if let Some((lead, c)) = row.first().cloned() {
            let inv = c.recip().expect("nonzero leading coefficient");
            let row: Row = row.into_iter().map(|(k, v)| (k, &v * &inv)).collect();
            pivots.insert(lead, row);
        }
    }
    // back substitution into reduced row echelon form, last pivot first
    let cols: Vec<usize> = pivots.keys().rev().copied().collect();
    for (n, &col) in cols.iter().enumerate() {
        let pivot = pivots[&col].clone();
        for &other in &cols[n + 1..] {
            let row = &pivots[&other];
            if let Ok(k) = row.binary_search_by_key(&col, |t| t.0) {
                let f = row[k].1.clone();
                let reduced = sub_scaled(row, &f, &pivot);
                pivots.insert(other, reduced);
            }
        }
    }
    let mut kernel_basis = Vec::new();
    for free in (0..unknowns).filter(|c| !pivots.contains_key(c)) {
        let mut x = vec![Scalar::zero(); unknowns];
        x[free] = Scalar::one();
        for (&col, row) in &pivots {
            if let Ok(k) = row.binary_search_by_key(&free, |t| t.0) {
                x[col] = -&row[k].1;
            }
        }
        kernel_basis.push(Tensor::from_vec(1, unknowns, x)?);
    }
    Ok(LinearSolveResult { unknowns, rank: pivots.len(), kernel_basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_equation() {
        let eq = LinearEquation::new(2, [(1, Scalar::one())]).unwrap();
        let res = solve_linear(2, &[eq]).unwrap();
        assert_eq!(res.rank, 1);
        assert_eq!(res.kernel_basis, vec![Tensor::from_vec(1, 2, vec![Scalar::zero(), Scalar::one()]).unwrap()]);
    }

    #[test]
    fn empty_system() {
        let res = solve_linear(4, &[]).unwrap();
        assert_eq!((res.rank, res.kernel_dim()), (0, 4));
    }

    #[test]
    fn out_of_range_unknown() {
        assert!(LinearEquation::new(2, [(3, Scalar::one())]).is_err());
        let eq = LinearEquation::dense(&[Scalar::zero(), Scalar::zero(), Scalar::one()]);
        assert!(solve_linear(2, &[eq]).is_err());
    }

    proptest! {
        #[test]
        fn kernel_vectors_solve_system(
            rows in proptest::collection::vec(proptest::collection::vec(-3i64..4, 6), 0..7)
        ) {
            let system: Vec<LinearEquation> = rows
                .iter()
                .map(|r| LinearEquation::dense(&r.iter().map(|&x| Scalar::from_int(x)).collect::<Vec<_>>()))
                .collect();
            let res = solve_linear(6, &system).unwrap();
            prop_assert_eq!(res.rank + res.kernel_dim(), 6);
            for v in &res.kernel_basis {
                for eq in &system {
                    prop_assert!(eq.evaluate(v.data()).is_zero());
                }
            }
            let dense = crate::linalg::Matrix::from_rows(
                rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect()
            ).unwrap();
            if !rows.is_empty() {
                prop_assert_eq!(res.rank, dense.rank());
            }
        }
    }
}
