//! Representations `ρ: ∧²A → gl(V)` and the constructions built from them.

use crate::algebra::{increasing_tuples, ThreeLieAlgebra};
use crate::error::{check_dim, check_index, Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::report::{Checker, VerificationReport};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: ThreeLieAlgebra,
    module_dim: usize,
    /// ρ(e_i,e_j) at `i*n + j` (0-based), both orientations stored
    rho: Vec<Matrix>,
}

impl Representation {
    /// Builds from matrices on pairs `i<j` (1-based); omitted pairs are zero.
    pub fn new(algebra: ThreeLieAlgebra, module_dim: usize, pairs: Vec<((usize, usize), Matrix)>) -> Result<Self> {
        let n = algebra.dim();
        let mut rho = vec![Matrix::zeros(module_dim, module_dim); n * n];
        let mut seen = vec![false; n * n];
        for ((i, j), m) in pairs {
            check_index(i, n)?;
            check_index(j, n)?;
            if i >= j {
                return Err(Error::InvalidArgument(format!("representation pair ({i},{j}) must satisfy i < j")));
            }
            check_dim(module_dim, m.rows())?;
            check_dim(module_dim, m.cols())?;
            let (a, b) = (i - 1, j - 1);
            if std::mem::replace(&mut seen[a * n + b], true) {
                return Err(Error::InvalidArgument(format!("representation pair ({i},{j}) listed twice")));
            }
            rho[b * n + a] = -&m;
            rho[a * n + b] = m;
        }
        Ok(Representation { algebra, module_dim, rho })
    }

    /// Builds from a function of 0-based pairs `i<j`.
    pub(crate) fn from_pairs0(
        algebra: ThreeLieAlgebra,
        module_dim: usize,
        mut f: impl FnMut(usize, usize) -> Matrix,
    ) -> Self {
        let n = algebra.dim();
        let mut rho = vec![Matrix::zeros(module_dim, module_dim); n * n];
        for i in 0..n {
            for j in i + 1..n {
                let m = f(i, j);
                rho[j * n + i] = -&m;
                rho[i * n + j] = m;
            }
        }
        Representation { algebra, module_dim, rho }
    }

    pub fn zero(algebra: ThreeLieAlgebra, module_dim: usize) -> Self {
        Self::from_pairs0(algebra, module_dim, |_, _| Matrix::zeros(module_dim, module_dim))
    }

    /// The adjoint representation; requires the Fundamental Identity.
    pub fn adjoint(algebra: &ThreeLieAlgebra) -> Result<Self> {
        require_fi(algebra)?;
        Ok(Self::adjoint_unchecked(algebra))
    }

    pub(crate) fn adjoint_unchecked(algebra: &ThreeLieAlgebra) -> Self {
        Self::from_pairs0(algebra.clone(), algebra.dim(), |i, j| algebra.ad_basis0(i, j))
    }

    /// The coadjoint representation `ad*`; requires the Fundamental Identity.
    pub fn coadjoint(algebra: &ThreeLieAlgebra) -> Result<Self> {
        Ok(Self::adjoint(algebra)?.dual())
    }

    pub(crate) fn coadjoint_unchecked(algebra: &ThreeLieAlgebra) -> Self {
        Self::adjoint_unchecked(algebra).dual()
    }

    /// `ad` acting on one tensor slot of `⊗³A`, with `(a,b,c) ↦ (a−1)n²+(b−1)n+c`.
    pub fn slot_representation(algebra: &ThreeLieAlgebra, slot: usize) -> Result<Self> {
        if !(1..=3).contains(&slot) {
            return Err(Error::InvalidArgument(format!("slot must be 1, 2 or 3, got {slot}")));
        }
        require_fi(algebra)?;
        Ok(Self::slot_unchecked(algebra, slot))
    }

    pub(crate) fn slot_unchecked(algebra: &ThreeLieAlgebra, slot: usize) -> Self {
        let n = algebra.dim();
        let m = n * n * n;
        let stride = n.pow(3 - slot as u32);
        Self::from_pairs0(algebra.clone(), m, |i, j| {
            let ad = algebra.ad_basis0(i, j);
            let mut big = Matrix::zeros(m, m);
            for col in 0..m {
                let b = (col / stride) % n;
                let base = col - b * stride;
                for a in 0..n {
                    let v = ad.entry(a, b);
                    if !v.is_zero() {
                        *big.entry_mut(base + a * stride, col) = v.clone();
                    }
                }
            }
            big
        })
    }

    pub fn algebra(&self) -> &ThreeLieAlgebra {
        &self.algebra
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    /// `ρ(e_i,e_j)` for any 1-based pair.
    pub fn rho(&self, i: usize, j: usize) -> Result<&Matrix> {
        let n = self.algebra.dim();
        check_index(i, n)?;
        check_index(j, n)?;
        Ok(&self.rho[(i - 1) * n + (j - 1)])
    }

    pub(crate) fn rho0(&self, i: usize, j: usize) -> &Matrix {
        &self.rho[i * self.algebra.dim() + j]
    }

    /// `ρ(x,y) = Σ x_i y_j ρ(e_i,e_j)`.
    pub fn rho_of(&self, x: &Vector, y: &Vector) -> Result<Matrix> {
        let n = self.algebra.dim();
        check_dim(n, x.dim())?;
        check_dim(n, y.dim())?;
        let mut out = Matrix::zeros(self.module_dim, self.module_dim);
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let w = &x.coords()[i] * &y.coords()[j];
                if !w.is_zero() {
                    out = &out + &self.rho0(i, j).scale(&w);
                }
            }
        }
        Ok(out)
    }

    /// The dual representation `ρ*(x,y) = −ρ(x,y)^T` on `V*`.
    pub fn dual(&self) -> Representation {
        Representation {
            algebra: self.algebra.clone(),
            module_dim: self.module_dim,
            rho: self.rho.iter().map(|m| -&m.transpose()).collect(),
        }
    }

    /// `ρ(v, e_j)` where `v` is given by coordinates, 0-based `j`.
    fn rho_vec_basis(&self, v: &Vector, j: usize) -> Matrix {
        let mut out = Matrix::zeros(self.module_dim, self.module_dim);
        for (i, c) in v.coords().iter().enumerate() {
            if !c.is_zero() && i != j {
                out = &out + &self.rho0(i, j).scale(c);
            }
        }
        out
    }

    /// Checks both defining conditions and the two derived identities.
    ///
    /// Condition (i) is checked on `i1<i2, i3<i4`, condition (ii) on `i1<i2<i3`
    /// with `i4` free, and the derived identities on `i1<i2<i3<i4`. A failure of
    /// only the derived identities is an internal inconsistency and says so.
    pub fn verify(&self) -> VerificationReport {
        let n = self.algebra.dim();
        let mut ch = Checker::new("representation");
        let brackets: Vec<Vector> = (0..n * n * n)
            .map(|f| self.algebra.basis_bracket0(f / (n * n), (f / n) % n, f % n))
            .collect();
        let br = |i: usize, j: usize, k: usize| &brackets[(i * n + j) * n + k];
        let prod = |a: (usize, usize), b: (usize, usize)| self.rho0(a.0, a.1).mul(self.rho0(b.0, b.1)).unwrap();
        for i1 in 0..n {
            for i2 in i1 + 1..n {
                for i3 in 0..n {
                    for i4 in i3 + 1..n {
                        if ch.done() {
                            return ch.finish();
                        }
                        let lhs = self.rho0(i1, i2).commutator(self.rho0(i3, i4)).unwrap();
                        let rhs = &self.rho_vec_basis(br(i1, i2, i3), i4) - &self.rho_vec_basis(br(i1, i2, i4), i3);
                        let r = &lhs - &rhs;
                        ch.residuals(&[i1 + 1, i2 + 1, i3 + 1, i4 + 1], matrix_entries(&r), Some("i"));
                    }
                }
            }
        }
        for t in increasing_tuples(n, 3) {
            let (i1, i2, i3) = (t[0], t[1], t[2]);
            for i4 in 0..n {
                if ch.done() {
                    return ch.finish();
                }
                let lhs = self.rho_vec_basis(br(i1, i2, i3), i4);
                let rhs = &(&prod((i1, i2), (i3, i4)) + &prod((i2, i3), (i1, i4))) + &prod((i3, i1), (i2, i4));
                let r = &lhs - &rhs;
                ch.residuals(&[i1 + 1, i2 + 1, i3 + 1, i4 + 1], matrix_entries(&r), Some("ii"));
            }
        }
        let primary = ch.finish();
        if !primary.passed {
            return primary;
        }
        let derived = self.verify_derived_identities();
        if derived.passed {
            let mut out = primary;
            out.checked_count += derived.checked_count;
            out
        } else {
            derived.with_note("derived identities fail although conditions (i) and (ii) hold: internal inconsistency")
        }
    }

    /// The two identities implied by a representation, on `i1<i2<i3<i4`.
    pub fn verify_derived_identities(&self) -> VerificationReport {
        let n = self.algebra.dim();
        let mut ch = Checker::new("representation_derived");
        let prod = |a: (usize, usize), b: (usize, usize)| self.rho0(a.0, a.1).mul(self.rho0(b.0, b.1)).unwrap();
        for q in increasing_tuples(n, 4) {
            if ch.done() {
                break;
            }
            let (x1, x2, x3, x4) = (q[0], q[1], q[2], q[3]);
            let br = |i, j, k| self.algebra.basis_bracket0(i, j, k);
            let a = &(&(&self.rho_vec_basis(&br(x1, x2, x3), x4) - &self.rho_vec_basis(&br(x1, x2, x4), x3))
                + &self.rho_vec_basis(&br(x1, x3, x4), x2))
                - &self.rho_vec_basis(&br(x2, x3, x4), x1);
            let tuple = [x1 + 1, x2 + 1, x3 + 1, x4 + 1];
            ch.residuals(&tuple, matrix_entries(&a), Some("derived_a"));
            let terms = [
                prod((x1, x2), (x3, x4)),
                prod((x2, x3), (x1, x4)),
                prod((x3, x1), (x2, x4)),
                prod((x3, x4), (x1, x2)),
                prod((x1, x4), (x2, x3)),
                prod((x2, x4), (x3, x1)),
            ];
            let b = terms.iter().skip(1).fold(terms[0].clone(), |acc, t| &acc + t);
            ch.residuals(&tuple, matrix_entries(&b), Some("derived_b"));
        }
        ch.finish()
    }

    /// The semidirect product `A ⋉_ρ V`; requires `ρ` to be a representation.
    pub fn semidirect_product(&self) -> Result<ThreeLieAlgebra> {
        let report = self.verify();
        if !report.passed {
            return Err(Error::Precondition("semidirect product needs a valid representation".into()));
        }
        Ok(self.semidirect_unchecked())
    }

    /// The bracket on `A ⊕ V` without checking the representation axioms.
    pub fn semidirect_unchecked(&self) -> ThreeLieAlgebra {
        let n = self.algebra.dim();
        let c = self.algebra.constants();
        ThreeLieAlgebra::from_fn_increasing(n + self.module_dim, |i, j, k, l| {
            if k <= n {
                if l <= n {
                    c.get(&[i, j, k, l]).unwrap().clone()
                } else {
                    Scalar::zero()
                }
            } else if j <= n && l > n {
                self.rho0(i - 1, j - 1).entry(l - n - 1, k - n - 1).clone()
            } else {
                Scalar::zero()
            }
        })
    }
}

fn require_fi(algebra: &ThreeLieAlgebra) -> Result<()> {
    if algebra.verify_fundamental_identity().passed {
        Ok(())
    } else {
        Err(Error::Precondition("algebra fails the Fundamental Identity".into()))
    }
}

fn matrix_entries(m: &Matrix) -> impl Iterator<Item = &Scalar> {
    (0..m.rows()).flat_map(move |a| (0..m.cols()).map(move |b| m.entry(a, b)))
}
