//! Cochains `C^p(A;V)` and the coboundary operator.

use crate::algebra::all_tuples;
use crate::algebra::increasing_tuples;
use crate::error::{check_dim, Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::report::{Checker, VerificationReport};
use crate::representation::Representation;
use crate::scalar::Scalar;

/// Highest input degree accepted by [`Cochain::coboundary`].
pub const MAX_COBOUNDARY_DEGREE: usize = 3;

/// A `p`-cochain `f: ∧²A ⊗ … ⊗ ∧²A ⊗ A → V` with `p−1` pair factors.
///
/// Values are stored densely: for every algebra multi-index of length `2p−1`
/// the `module_dim` coordinates of the value, module slot fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    rep: Representation,
    degree: usize,
    values: Vec<Scalar>,
}

type Sparse = Vec<(usize, Scalar)>;

fn basis_arg(i: usize) -> Sparse {
    vec![(i, Scalar::one())]
}

fn sparse(v: &[Scalar]) -> Sparse {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect()
}

impl Cochain {
    fn slots(degree: usize) -> usize {
        2 * degree - 1
    }

    /// Builds from values at every 1-based multi-index, validating pair antisymmetry.
    pub fn from_fn(rep: &Representation, degree: usize, mut f: impl FnMut(&[usize]) -> Vector) -> Result<Self> {
        if !(1..=MAX_COBOUNDARY_DEGREE + 1).contains(&degree) {
            return Err(Error::InvalidArgument(format!("cochain degree {degree} not supported")));
        }
        let n = rep.algebra().dim();
        let m = rep.module_dim();
        let mut values = Vec::with_capacity(n.pow(Self::slots(degree) as u32) * m);
        for t in all_tuples(n, Self::slots(degree)) {
            let idx: Vec<usize> = t.iter().map(|i| i + 1).collect();
            let v = f(&idx);
            check_dim(m, v.dim())?;
            values.extend(v.into_coords());
        }
        let c = Cochain { rep: rep.clone(), degree, values };
        c.validate()?;
        Ok(c)
    }

    /// Builds from values on multi-indices whose pairs are strictly increasing;
    /// the remaining values follow from antisymmetry.
    pub fn from_canonical_fn(
        rep: &Representation,
        degree: usize,
        mut f: impl FnMut(&[usize]) -> Vector,
    ) -> Result<Self> {
        let m = rep.module_dim();
        let mut err = None;
        let c = Self::from_fn(rep, degree, |idx| {
            let mut sign = 1;
            let mut canon = idx.to_vec();
            for p in 0..degree - 1 {
                let (a, b) = (canon[2 * p], canon[2 * p + 1]);
                if a == b {
                    return Vector::zeros(m);
                }
                if a > b {
                    canon.swap(2 * p, 2 * p + 1);
                    sign = -sign;
                }
            }
            let v = f(&canon);
            if v.dim() != m && err.is_none() {
                err = Some(Error::DimensionMismatch { expected: m, found: v.dim() });
            }
            if sign < 0 {
                -&v
            } else {
                v
            }
        });
        match err {
            Some(e) => Err(e),
            None => c,
        }
    }

    /// The 1-cochain given by a linear map `A → V` (an `m×n` matrix).
    pub fn from_linear_map(rep: &Representation, f: &Matrix) -> Result<Self> {
        check_dim(rep.module_dim(), f.rows())?;
        check_dim(rep.algebra().dim(), f.cols())?;
        Self::from_fn(rep, 1, |idx| f.column(idx[0]).unwrap())
    }

    pub fn zero(rep: &Representation, degree: usize) -> Result<Self> {
        let m = rep.module_dim();
        Self::from_fn(rep, degree, |_| Vector::zeros(m))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Scalar::is_zero)
    }

    fn offset(&self, idx0: &[usize]) -> usize {
        let n = self.rep.algebra().dim();
        idx0.iter().fold(0, |acc, i| acc * n + i) * self.rep.module_dim()
    }

    fn value0(&self, idx0: &[usize]) -> &[Scalar] {
        let m = self.rep.module_dim();
        let off = self.offset(idx0);
        &self.values[off..off + m]
    }

    /// Value at a 1-based algebra multi-index.
    pub fn value(&self, idx: &[usize]) -> Result<Vector> {
        let n = self.rep.algebra().dim();
        check_dim(Self::slots(self.degree), idx.len())?;
        for &i in idx {
            crate::error::check_index(i, n)?;
        }
        let idx0: Vec<usize> = idx.iter().map(|i| i - 1).collect();
        Ok(Vector::from_vec(self.value0(&idx0).to_vec()))
    }

    fn validate(&self) -> Result<()> {
        let n = self.rep.algebra().dim();
        for t in all_tuples(n, Self::slots(self.degree)) {
            for p in 0..self.degree - 1 {
                let mut s = t.clone();
                s.swap(2 * p, 2 * p + 1);
                let (a, b) = (self.value0(&t), self.value0(&s));
                if a.iter().zip(b).any(|(x, y)| *x != -y) {
                    let idx: Vec<usize> = t.iter().map(|i| i + 1).collect();
                    return Err(Error::InvalidArgument(format!(
                        "cochain not antisymmetric in pair {} at {idx:?}",
                        p + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Multilinear evaluation on sparse coordinate arguments.
    fn eval(&self, args: &[Sparse]) -> Vec<Scalar> {
        let m = self.rep.module_dim();
        let mut out = vec![Scalar::zero(); m];
        let mut idx = vec![0; args.len()];
        self.eval_rec(args, 0, Scalar::one(), &mut idx, &mut out);
        out
    }

    fn eval_rec(&self, args: &[Sparse], slot: usize, w: Scalar, idx: &mut Vec<usize>, out: &mut [Scalar]) {
        if slot == args.len() {
            for (o, v) in out.iter_mut().zip(self.value0(idx)) {
                if !v.is_zero() {
                    *o += &(&w * v);
                }
            }
            return;
        }
        for (i, c) in &args[slot] {
            idx[slot] = *i;
            self.eval_rec(args, slot + 1, &w * c, idx, out);
        }
    }

    /// The coboundary `δf`, a cochain of degree `p+1`.
    ///
    /// The first sum of the defining formula runs over `1 ≤ j < k ≤ p`, the new
    /// pair replacing `X_k`; the last two terms drop `X_p` from the argument list.
    pub fn coboundary(&self) -> Result<Cochain> {
        let p = self.degree;
        if p > MAX_COBOUNDARY_DEGREE {
            return Err(Error::InvalidArgument(format!("coboundary supports degree at most {MAX_COBOUNDARY_DEGREE}")));
        }
        let alg = self.rep.algebra();
        let m = self.rep.module_dim();
        let br = |x: &Sparse, y: &Sparse, z: &Sparse| -> Sparse {
            let n = alg.dim();
            let mut out = vec![Scalar::zero(); n];
            for (i, a) in x {
                for (j, b) in y {
                    for (k, c) in z {
                        let v = alg.basis_bracket0(*i, *j, *k);
                        let w = &(a * b) * c;
                        for (o, vc) in out.iter_mut().zip(v.coords()) {
                            if !vc.is_zero() {
                                *o += &(&w * vc);
                            }
                        }
                    }
                }
            }
            sparse(&out)
        };
        let act = |x1: usize, x2: usize, v: &[Scalar]| -> Vec<Scalar> {
            self.rep.rho0(x1, x2).apply(&Vector::from_vec(v.to_vec())).unwrap().into_coords()
        };
        let add_signed = |out: &mut Vec<Scalar>, v: &[Scalar], sign: i64| {
            for (o, x) in out.iter_mut().zip(v) {
                if sign > 0 {
                    *o += x;
                } else {
                    *o -= x;
                }
            }
        };
        let sign_of = |e: usize| if e.is_multiple_of(2) { 1 } else { -1 };
        Cochain::from_canonical_fn(&self.rep, p + 1, |idx| {
            let idx0: Vec<usize> = idx.iter().map(|i| i - 1).collect();
            let pairs: Vec<(usize, usize)> = (0..p).map(|j| (idx0[2 * j], idx0[2 * j + 1])).collect();
            let z = idx0[2 * p];
            let mut out = vec![Scalar::zero(); m];
            // arguments of f for the pair list with X_j removed
            let without = |j: usize| -> Vec<Sparse> {
                let mut args = Vec::with_capacity(2 * p - 1);
                for (q, &(a, b)) in pairs.iter().enumerate() {
                    if q != j {
                        args.push(basis_arg(a));
                        args.push(basis_arg(b));
                    }
                }
                args
            };
            for j in 0..p {
                let (xj1, xj2) = pairs[j];
                for (k, &(xk1, xk2)) in pairs.iter().enumerate().skip(j + 1) {
                    // X_k sits at pair position k-1 once X_j is removed
                    let pos = 2 * (k - 1);
                    let mut args = without(j);
                    args[pos] = br(&basis_arg(xj1), &basis_arg(xj2), &basis_arg(xk1));
                    args[pos + 1] = basis_arg(xk2);
                    args.push(basis_arg(z));
                    add_signed(&mut out, &self.eval(&args), sign_of(j + 1));
                    let mut args = without(j);
                    args[pos] = basis_arg(xk1);
                    args[pos + 1] = br(&basis_arg(xj1), &basis_arg(xj2), &basis_arg(xk2));
                    args.push(basis_arg(z));
                    add_signed(&mut out, &self.eval(&args), sign_of(j + 1));
                }
                let mut args = without(j);
                args.push(br(&basis_arg(xj1), &basis_arg(xj2), &basis_arg(z)));
                add_signed(&mut out, &self.eval(&args), sign_of(j + 1));
                let mut args = without(j);
                args.push(basis_arg(z));
                let v = self.eval(&args);
                add_signed(&mut out, &act(xj1, xj2, &v), sign_of(j + 2));
            }
            let (xp1, xp2) = pairs[p - 1];
            let mut args = without(p - 1);
            args.push(basis_arg(xp1));
            let v = self.eval(&args);
            add_signed(&mut out, &act(xp2, z, &v), sign_of(p + 1));
            let mut args = without(p - 1);
            args.push(basis_arg(xp2));
            let v = self.eval(&args);
            add_signed(&mut out, &act(xp1, z, &v), sign_of(p));
            Vector::from_vec(out)
        })
    }
}

/// Checks `f([x1,x2,x3]) = ρ(x1,x2)f(x3) + ρ(x2,x3)f(x1) + ρ(x3,x1)f(x2)` on `i<j<k`.
pub fn is_one_cocycle(f: &Matrix, rep: &Representation) -> Result<VerificationReport> {
    let alg = rep.algebra();
    let n = alg.dim();
    check_dim(rep.module_dim(), f.rows())?;
    check_dim(n, f.cols())?;
    let cols: Vec<Vector> = (1..=n).map(|k| f.column(k).unwrap()).collect();
    let mut ch = Checker::new("one_cocycle");
    for t in increasing_tuples(n, 3) {
        if ch.done() {
            break;
        }
        let (i, j, k) = (t[0], t[1], t[2]);
        let lhs = f.apply(&alg.basis_bracket0(i, j, k))?;
        let rhs = &(&rep.rho0(i, j).apply(&cols[k])? + &rep.rho0(j, k).apply(&cols[i])?)
            + &rep.rho0(k, i).apply(&cols[j])?;
        let r = &lhs - &rhs;
        ch.residuals(&[i + 1, j + 1, k + 1], r.coords(), None);
    }
    Ok(ch.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ThreeLieAlgebra;

    fn dim3() -> ThreeLieAlgebra {
        ThreeLieAlgebra::from_brackets(3, &[([1, 2, 3], vec![(1, Scalar::one())])]).unwrap()
    }

    #[test]
    fn degree_one_coboundary_matches_cocycle_formula() {
        let a = dim3();
        let rep = Representation::adjoint(&a).unwrap();
        let f = Matrix::from_int_rows(&[&[1, 2, 0], &[0, -1, 3], &[2, 0, 1]]).unwrap();
        let c = Cochain::from_linear_map(&rep, &f).unwrap();
        let d = c.coboundary().unwrap();
        assert_eq!(d.degree(), 2);
        // δf(x1,x2,z) = -f([x1,x2,z]) + ρ(x1,x2)f(z) + ρ(x2,z)f(x1) + ρ(z,x1)f(x2)
        let v = d.value(&[2, 3, 1]).unwrap();
        let fcol = |k| f.column(k).unwrap();
        let expected = &(&(&-&f.apply(&a.bracket_basis(2, 3, 1).unwrap()).unwrap()
            + &rep.rho(2, 3).unwrap().apply(&fcol(1)).unwrap())
            + &rep.rho(3, 1).unwrap().apply(&fcol(2)).unwrap())
            + &rep.rho(1, 2).unwrap().apply(&fcol(3)).unwrap();
        assert_eq!(v, expected);
    }

    #[test]
    fn rejects_non_antisymmetric_values() {
        let a = dim3();
        let rep = Representation::adjoint(&a).unwrap();
        let bad = Cochain::from_fn(&rep, 2, |idx| if idx == [1, 2, 1] { Vector::basis(1, 3).unwrap() } else { Vector::zeros(3) });
        assert!(bad.is_err());
        assert!(Cochain::zero(&rep, 5).is_err());
    }
}

