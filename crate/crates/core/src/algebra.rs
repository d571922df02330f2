//! 3-Lie algebras given by structure constants.

use crate::error::{check_dim, check_index, Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::report::{Checker, VerificationReport};
use crate::scalar::Scalar;
use crate::tensor::Tensor;

/// Element of an algebra in its chosen basis.
pub type AlgebraElement = Vector;

/// One row of a bracket table: `[e_i,e_j,e_k] = Σ c_l e_l` for `i<j<k`.
pub type Bracket = ([usize; 3], Vec<(usize, Scalar)>);

/// A totally antisymmetric ternary bracket: `c[i][j][k][l]` is the coefficient of `e_l` in `[e_i,e_j,e_k]`.
///
/// Antisymmetry is enforced on construction; the Fundamental Identity is
/// checked on demand by [`ThreeLieAlgebra::verify_fundamental_identity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeLieAlgebra {
    constants: Tensor,
    /// nonzero constants as 0-based (i, j, k, l, value), all orderings included
    terms: Vec<(usize, usize, usize, usize, Scalar)>,
}

const EVEN: [[usize; 3]; 3] = [[0, 1, 2], [1, 2, 0], [2, 0, 1]];
const ODD: [[usize; 3]; 3] = [[1, 0, 2], [0, 2, 1], [2, 1, 0]];

impl ThreeLieAlgebra {
    /// Validates total antisymmetry of an order-4 constant tensor.
    pub fn new(constants: Tensor) -> Result<Self> {
        if constants.order() != 4 {
            return Err(Error::InvalidArgument(format!(
                "structure constants must have order 4, got {}",
                constants.order()
            )));
        }
        let n = constants.dim();
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    for l in 1..=n {
                        let v = constants.get(&[i, j, k, l])?;
                        let swaps = [
                            constants.get(&[j, i, k, l])?,
                            constants.get(&[i, k, j, l])?,
                            constants.get(&[k, j, i, l])?,
                        ];
                        if swaps.iter().any(|w| *w != &-v) {
                            return Err(Error::NotAntisymmetric(format!(
                                "c[{i}][{j}][{k}][{l}] = {v} is not negated by a transposition"
                            )));
                        }
                    }
                }
            }
        }
        Ok(Self::from_valid(constants))
    }

    fn from_valid(constants: Tensor) -> Self {
        let terms = constants
            .nonzeros()
            .map(|(idx, v)| (idx[0] - 1, idx[1] - 1, idx[2] - 1, idx[3] - 1, v.clone()))
            .collect();
        ThreeLieAlgebra { constants, terms }
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_valid(Tensor::zeros(4, dim))
    }

    /// Builds from brackets on strictly increasing basis triples, extended antisymmetrically.
    pub fn from_brackets(dim: usize, brackets: &[Bracket]) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument("dimension must be positive".into()));
        }
        let mut c = Tensor::zeros(4, dim);
        let mut seen = std::collections::BTreeSet::new();
        for (args, result) in brackets {
            for &a in args {
                check_index(a, dim)?;
            }
            if !(args[0] < args[1] && args[1] < args[2]) {
                return Err(Error::InvalidArgument(format!("bracket arguments {args:?} must be strictly increasing")));
            }
            if !seen.insert(*args) {
                return Err(Error::InvalidArgument(format!("bracket {args:?} listed twice")));
            }
            for (l, coeff) in result {
                check_index(*l, dim)?;
                antisymmetric_add(&mut c, *args, *l, coeff);
            }
        }
        Ok(Self::from_valid(c))
    }

    /// Builds from arbitrary constants by keeping the increasing-triple entries and antisymmetrizing.
    pub fn from_fn_increasing(dim: usize, mut f: impl FnMut(usize, usize, usize, usize) -> Scalar) -> Self {
        let mut c = Tensor::zeros(4, dim);
        for i in 1..=dim {
            for j in i + 1..=dim {
                for k in j + 1..=dim {
                    for l in 1..=dim {
                        let v = f(i, j, k, l);
                        if !v.is_zero() {
                            antisymmetric_add(&mut c, [i, j, k], l, &v);
                        }
                    }
                }
            }
        }
        Self::from_valid(c)
    }

    pub fn dim(&self) -> usize {
        self.constants.dim()
    }

    pub fn constants(&self) -> &Tensor {
        &self.constants
    }

    /// Coefficient of `e_l` in `[e_i,e_j,e_k]`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize, l: usize) -> Result<&Scalar> {
        self.constants.get(&[i, j, k, l])
    }

    pub fn is_abelian(&self) -> bool {
        self.terms.is_empty()
    }

    /// Trilinear evaluation of the bracket on coordinate slices.
    pub(crate) fn bracket_coords(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (i, j, k, l, c) in &self.terms {
            let (a, b, d) = (&x[*i], &y[*j], &z[*k]);
            if a.is_zero() || b.is_zero() || d.is_zero() {
                continue;
            }
            out[*l] += &(&(&(a * b) * d) * c);
        }
        out
    }

    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement, z: &AlgebraElement) -> Result<AlgebraElement> {
        let n = self.dim();
        check_dim(n, x.dim())?;
        check_dim(n, y.dim())?;
        check_dim(n, z.dim())?;
        Ok(Vector::from_vec(self.bracket_coords(x.coords(), y.coords(), z.coords())))
    }

    /// `[e_i,e_j,e_k]` for 1-based indices.
    pub fn bracket_basis(&self, i: usize, j: usize, k: usize) -> Result<AlgebraElement> {
        let n = self.dim();
        for x in [i, j, k] {
            check_index(x, n)?;
        }
        Ok(self.basis_bracket0(i - 1, j - 1, k - 1))
    }

    pub(crate) fn basis_bracket0(&self, i: usize, j: usize, k: usize) -> Vector {
        let n = self.dim();
        let base = ((i * n + j) * n + k) * n;
        Vector::from_vec(self.constants.data()[base..base + n].to_vec())
    }

    /// Matrix of `ad_{x,y}: z ↦ [x,y,z]`.
    pub fn ad_map(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<Matrix> {
        let n = self.dim();
        check_dim(n, x.dim())?;
        check_dim(n, y.dim())?;
        let mut m = Matrix::zeros(n, n);
        for (i, j, k, l, c) in &self.terms {
            let (a, b) = (&x.coords()[*i], &y.coords()[*j]);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            *m.entry_mut(*l, *k) += &(&(a * b) * c);
        }
        Ok(m)
    }

    /// `ad_{e_i,e_j}` for 0-based indices.
    pub(crate) fn ad_basis0(&self, i: usize, j: usize) -> Matrix {
        let n = self.dim();
        let data = self.constants.data();
        Matrix::from_fn(n, n, |l, k| data[((i * n + j) * n + (k - 1)) * n + (l - 1)].clone())
    }

    /// Residual of the Fundamental Identity, checked on `i1<i2`, `i3<i4<i5`.
    pub fn verify_fundamental_identity(&self) -> VerificationReport {
        let n = self.dim();
        let mut ch = Checker::new("fundamental_identity");
        let basis: Vec<Vector> = (0..n).map(|i| Vector::basis(i + 1, n).unwrap()).collect();
        for i1 in 0..n {
            for i2 in i1 + 1..n {
                let d = self.ad_basis0(i1, i2);
                let images: Vec<Vector> = (0..n).map(|k| d.column(k + 1).unwrap()).collect();
                for i3 in 0..n {
                    for i4 in i3 + 1..n {
                        for i5 in i4 + 1..n {
                            if ch.done() {
                                return ch.finish();
                            }
                            let inner = self.basis_bracket0(i3, i4, i5);
                            let mut r = d.apply(&inner).unwrap().into_coords();
                            let (x3, x4, x5) = (basis[i3].coords(), basis[i4].coords(), basis[i5].coords());
                            let rhs = [
                                self.bracket_coords(images[i3].coords(), x4, x5),
                                self.bracket_coords(x3, images[i4].coords(), x5),
                                self.bracket_coords(x3, x4, images[i5].coords()),
                            ];
                            for part in &rhs {
                                for (a, b) in r.iter_mut().zip(part) {
                                    *a -= b;
                                }
                            }
                            ch.residuals(&[i1 + 1, i2 + 1, i3 + 1, i4 + 1, i5 + 1], &r, None);
                        }
                    }
                }
            }
        }
        ch.finish()
    }

    /// The two alternating identities equivalent to the Fundamental Identity.
    ///
    /// Both are alternating in their first four arguments, so they are checked
    /// on `i1<i2<i3<i4` with `i5` free; the witness carries label `a` or `b`.
    pub fn verify_equivalent_identities(&self) -> VerificationReport {
        let n = self.dim();
        let mut ch = Checker::new("equivalent_identities");
        for q in increasing_tuples(n, 4) {
            for i5 in 0..n {
                if ch.done() {
                    return ch.finish();
                }
                let x = [q[0], q[1], q[2], q[3], i5];
                let tuple: Vec<usize> = x.iter().map(|i| i + 1).collect();
                let (a, b) = self.equivalent_identity_residuals(x);
                ch.residuals(&tuple, &a, Some("a"));
                ch.residuals(&tuple, &b, Some("b"));
            }
        }
        ch.finish()
    }

    /// Residuals of identities (a) and (b) at a 0-based basis quintuple.
    pub(crate) fn equivalent_identity_residuals(&self, x: [usize; 5]) -> (Vec<Scalar>, Vec<Scalar>) {
        let n = self.dim();
        // [[x_a,x_b,x_c],x_d,x_e]
        let nested = |a: usize, b: usize, c: usize, d: usize, e: usize| -> Vec<Scalar> {
            let inner = self.basis_bracket0(x[a], x[b], x[c]);
            let ed = Vector::basis(x[d] + 1, n).unwrap();
            let ee = Vector::basis(x[e] + 1, n).unwrap();
            self.bracket_coords(inner.coords(), ed.coords(), ee.coords())
        };
        let combine = |parts: &[(i64, Vec<Scalar>)]| -> Vec<Scalar> {
            let mut out = vec![Scalar::zero(); n];
            for (sign, v) in parts {
                for (o, c) in out.iter_mut().zip(v) {
                    if *sign > 0 {
                        *o += c;
                    } else {
                        *o -= c;
                    }
                }
            }
            out
        };
        let a = combine(&[
            (1, nested(0, 1, 2, 3, 4)),
            (-1, nested(0, 1, 3, 2, 4)),
            (1, nested(0, 2, 3, 1, 4)),
            (-1, nested(1, 2, 3, 0, 4)),
        ]);
        let b = combine(&[
            (1, nested(0, 1, 4, 2, 3)),
            (1, nested(2, 3, 4, 0, 1)),
            (-1, nested(0, 2, 4, 1, 3)),
            (-1, nested(1, 3, 4, 0, 2)),
            (1, nested(0, 3, 4, 1, 2)),
            (1, nested(1, 2, 4, 0, 3)),
        ]);
        (a, b)
    }

    /// Checks `D[x,y,z] = [Dx,y,z]+[x,Dy,z]+[x,y,Dz]` on basis triples `i<j<k`.
    pub fn is_derivation(&self, d: &Matrix) -> Result<VerificationReport> {
        let n = self.dim();
        check_dim(n, d.rows())?;
        check_dim(n, d.cols())?;
        let mut ch = Checker::new("derivation");
        let basis: Vec<Vector> = (0..n).map(|i| Vector::basis(i + 1, n).unwrap()).collect();
        let images: Vec<Vector> = (0..n).map(|k| d.column(k + 1).unwrap()).collect();
        for t in increasing_tuples(n, 3) {
            let (i, j, k) = (t[0], t[1], t[2]);
            let mut r = d.apply(&self.basis_bracket0(i, j, k))?.into_coords();
            for part in [
                self.bracket_coords(images[i].coords(), basis[j].coords(), basis[k].coords()),
                self.bracket_coords(basis[i].coords(), images[j].coords(), basis[k].coords()),
                self.bracket_coords(basis[i].coords(), basis[j].coords(), images[k].coords()),
            ] {
                for (a, b) in r.iter_mut().zip(&part) {
                    *a -= b;
                }
            }
            ch.residuals(&[i + 1, j + 1, k + 1], &r, None);
        }
        Ok(ch.finish())
    }

    /// Checks `T[x,y,z]_src = [Tx,Ty,Tz]_dst` on basis triples of `src`.
    pub fn is_morphism(src: &ThreeLieAlgebra, dst: &ThreeLieAlgebra, t: &Matrix) -> Result<VerificationReport> {
        check_dim(src.dim(), t.cols())?;
        check_dim(dst.dim(), t.rows())?;
        let mut ch = Checker::new("morphism");
        let images: Vec<Vector> = (1..=src.dim()).map(|k| t.column(k).unwrap()).collect();
        for q in increasing_tuples(src.dim(), 3) {
            let lhs = t.apply(&src.basis_bracket0(q[0], q[1], q[2]))?;
            let rhs = dst.bracket_coords(images[q[0]].coords(), images[q[1]].coords(), images[q[2]].coords());
            let r: Vec<Scalar> = lhs.coords().iter().zip(&rhs).map(|(a, b)| a - b).collect();
            ch.residuals(&[q[0] + 1, q[1] + 1, q[2] + 1], &r, None);
        }
        Ok(ch.finish())
    }
}

/// Adds `v` at `(args, l)` and at every permutation of `args` with the permutation's sign.
fn antisymmetric_add(c: &mut Tensor, args: [usize; 3], l: usize, v: &Scalar) {
    let neg = -v;
    for p in EVEN {
        c.add_at(&[args[p[0]], args[p[1]], args[p[2]], l], v).unwrap();
    }
    for p in ODD {
        c.add_at(&[args[p[0]], args[p[1]], args[p[2]], l], &neg).unwrap();
    }
}

/// All strictly increasing 0-based `k`-tuples from `0..n`, in lexicographic order.
pub(crate) fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// All 0-based `k`-tuples from `0..n`, in lexicographic order.
pub(crate) fn all_tuples(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n.pow(k as u32)).map(move |mut flat| {
        let mut t = vec![0; k];
        for slot in (0..k).rev() {
            t[slot] = flat % n;
            flat /= n;
        }
        t
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn dim3() -> ThreeLieAlgebra {
        ThreeLieAlgebra::from_brackets(3, &[([1, 2, 3], vec![(1, s(1))])]).unwrap()
    }

    #[test]
    fn antisymmetric_extension() {
        let a = dim3();
        let e = |i| Vector::basis(i, 3).unwrap();
        assert_eq!(a.bracket(&e(2), &e(3), &e(1)).unwrap(), e(1));
        assert_eq!(a.bracket(&e(2), &e(1), &e(3)).unwrap(), -&e(1));
        assert!(a.bracket(&e(1), &e(1), &e(2)).unwrap().is_zero());
        assert_eq!(*a.structure_constant(3, 2, 1, 1).unwrap(), s(-1));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(ThreeLieAlgebra::from_brackets(3, &[([2, 1, 3], vec![(1, s(1))])]).is_err());
        assert!(ThreeLieAlgebra::from_brackets(3, &[([1, 2, 4], vec![(1, s(1))])]).is_err());
        let mut c = Tensor::zeros(4, 3);
        c.set(&[1, 2, 3, 1], s(1)).unwrap();
        assert!(matches!(ThreeLieAlgebra::new(c), Err(Error::NotAntisymmetric(_))));
        let v = Vector::zeros(2);
        assert!(dim3().bracket(&v, &v, &v).is_err());
    }

    #[test]
    fn ad_matrix_columns() {
        let a = dim3();
        let e = |i| Vector::basis(i, 3).unwrap();
        let ad = a.ad_map(&e(2), &e(3)).unwrap();
        assert_eq!(ad.apply(&e(1)).unwrap(), e(1));
        assert!(ad.apply(&e(2)).unwrap().is_zero());
        assert!(ad.apply(&e(3)).unwrap().is_zero());
        assert_eq!(ad, a.ad_basis0(1, 2));
    }

    #[test]
    fn tuple_enumeration() {
        assert_eq!(increasing_tuples(4, 3).len(), 4);
        assert_eq!(increasing_tuples(3, 4).len(), 0);
        assert_eq!(all_tuples(3, 2).count(), 9);
        assert_eq!(all_tuples(3, 2).nth(5).unwrap(), vec![1, 2]);
    }

    #[test]
    fn identity_is_not_a_derivation() {
        let r = dim3().is_derivation(&Matrix::identity(3)).unwrap();
        assert!(!r.passed);
        let w = r.witness.unwrap();
        assert_eq!(w.indices, vec![1, 2, 3, 1]);
        assert_eq!(w.residual, s(-2));
    }
}
