//! O-operators, 3-pre-Lie algebras and the solutions of the classical Yang–Baxter equation they produce.

use crate::algebra::{increasing_tuples, Bracket, ThreeLieAlgebra};
use crate::error::{check_dim, Error, Result};
use crate::form::BilinearForm;
use crate::linalg::{Matrix, Vector};
use crate::report::{Checker, VerificationReport};
use crate::representation::Representation;
use crate::scalar::Scalar;
use crate::tensor::Tensor;
use crate::yang_baxter::{verify_3sb, RElement};

/// A linear map `T: V → A` stored as a `dim A × dim V` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOperator {
    matrix: Matrix,
}

impl LinearOperator {
    pub fn new(matrix: Matrix) -> Self {
        LinearOperator { matrix }
    }

    pub fn identity(n: usize) -> Self {
        LinearOperator { matrix: Matrix::identity(n) }
    }

    pub fn zero(source_dim: usize, target_dim: usize) -> Self {
        LinearOperator { matrix: Matrix::zeros(target_dim, source_dim) }
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        self.matrix.apply(v)
    }

    /// `T̄ ∈ V*⊗A` with `T̄(v,ξ) = ⟨ξ,Tv⟩`, as a `dim V × dim A` coefficient matrix.
    pub fn as_tensor(&self) -> Matrix {
        self.matrix.transpose()
    }
}

fn check_shapes(t: &LinearOperator, a: &ThreeLieAlgebra, rep: &Representation) -> Result<()> {
    if rep.algebra() != a {
        return Err(Error::InvalidArgument("representation belongs to a different algebra".into()));
    }
    check_dim(a.dim(), t.target_dim())?;
    check_dim(rep.module_dim(), t.source_dim())
}

/// `[Tu,Tv,Tw] = T(ρ(Tu,Tv)w + ρ(Tv,Tw)u + ρ(Tw,Tu)v)` on module basis triples.
///
/// The residual is alternating, so triples `i<j<k` suffice. When `rep` is the
/// adjoint representation the report carries a Rota–Baxter note.
pub fn verify_o_operator(t: &LinearOperator, a: &ThreeLieAlgebra, rep: &Representation) -> Result<VerificationReport> {
    check_shapes(t, a, rep)?;
    let m = rep.module_dim();
    let images: Vec<Vector> = (0..m).map(|i| t.matrix.column(i + 1).unwrap()).collect();
    let mut ch = Checker::new("o_operator");
    for q in increasing_tuples(m, 3) {
        if ch.done() {
            break;
        }
        let (i, j, k) = (q[0], q[1], q[2]);
        let basis = |x: usize| Vector::basis(x + 1, m).unwrap();
        let lhs = a.bracket(&images[i], &images[j], &images[k])?;
        let inner = &(&rep.rho_of(&images[i], &images[j])?.apply(&basis(k))?
            + &rep.rho_of(&images[j], &images[k])?.apply(&basis(i))?)
            + &rep.rho_of(&images[k], &images[i])?.apply(&basis(j))?;
        let res = &lhs - &t.apply(&inner)?;
        ch.residuals(&[i + 1, j + 1, k + 1], res.coords(), None);
    }
    let report = ch.finish();
    let adjoint = m == a.dim() && *rep == Representation::adjoint_unchecked(a);
    Ok(if adjoint { report.with_note("rota_baxter: adjoint representation, weight zero") } else { report })
}

/// The algebra `A ⋉_{ρ*} V*` and `r = T̄ − σ12(T̄)` in its coordinates (`A` first).
pub fn r_from_o_operator(
    t: &LinearOperator,
    a: &ThreeLieAlgebra,
    rep: &Representation,
) -> Result<(ThreeLieAlgebra, RElement)> {
    check_shapes(t, a, rep)?;
    let big = rep.dual().semidirect_product()?;
    let n = a.dim();
    let m = rep.module_dim();
    let mut r = Matrix::zeros(n + m, n + m);
    for i in 0..m {
        for c in 0..n {
            let v = t.matrix.entry(c, i);
            if !v.is_zero() {
                *r.entry_mut(n + i, c) = v.clone();
                *r.entry_mut(c, n + i) = -v;
            }
        }
    }
    let r = RElement::new(big.clone(), r)?;
    Ok((big, r))
}

/// A product `{·,·,·}` antisymmetric in its first two arguments: `p[i][j][k][l]` is the coefficient of `e_l` in `{e_i,e_j,e_k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreLieAlgebra {
    constants: Tensor,
}

impl PreLieAlgebra {
    pub fn new(constants: Tensor) -> Result<Self> {
        if constants.order() != 4 {
            return Err(Error::InvalidArgument("pre-Lie constants must have order 4".into()));
        }
        if !constants.is_antisymmetric_in(1, 2)? {
            return Err(Error::NotAntisymmetric("{x,y,z} must equal -{y,x,z}".into()));
        }
        Ok(PreLieAlgebra { constants })
    }

    pub fn zero(dim: usize) -> Self {
        PreLieAlgebra { constants: Tensor::zeros(4, dim) }
    }

    /// Builds from products on `i<j` (1-based) with any `k`; the rest follows by antisymmetry.
    pub fn from_products(dim: usize, products: &[Bracket]) -> Result<Self> {
        let mut t = Tensor::zeros(4, dim);
        let mut seen = std::collections::HashSet::new();
        for ([i, j, k], terms) in products {
            if i >= j {
                return Err(Error::InvalidArgument(format!("pre-Lie args ({i},{j},{k}) need i < j")));
            }
            if !seen.insert([*i, *j, *k]) {
                return Err(Error::InvalidArgument(format!("pre-Lie args ({i},{j},{k}) listed twice")));
            }
            for (l, c) in terms {
                t.add_at(&[*i, *j, *k, *l], c)?;
                t.add_at(&[*j, *i, *k, *l], &-c)?;
            }
        }
        Self::new(t)
    }

    pub fn dim(&self) -> usize {
        self.constants.dim()
    }

    pub fn constants(&self) -> &Tensor {
        &self.constants
    }

    /// `L(e_i,e_j)` for 0-based indices.
    fn left0(&self, i: usize, j: usize) -> Matrix {
        let n = self.dim();
        let d = self.constants.data();
        Matrix::from_fn(n, n, |l, k| d[((i * n + j) * n + (k - 1)) * n + (l - 1)].clone())
    }

    pub fn product(&self, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
        let n = self.dim();
        for v in [x, y, z] {
            check_dim(n, v.dim())?;
        }
        let mut out = vec![Scalar::zero(); n];
        let d = self.constants.data();
        for (i, a) in x.coords().iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.coords().iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in z.coords().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    let w = &ab * c;
                    for (l, o) in out.iter_mut().enumerate() {
                        let v = &d[((i * n + j) * n + k) * n + l];
                        if !v.is_zero() {
                            *o += &(&w * v);
                        }
                    }
                }
            }
        }
        Ok(Vector::from_vec(out))
    }

    /// `[x,y,z]_C = {x,y,z} + {y,z,x} + {z,x,y}` without checking the pre-Lie identities.
    pub(crate) fn cyclic_bracket(&self) -> ThreeLieAlgebra {
        let c = &self.constants;
        ThreeLieAlgebra::from_fn_increasing(self.dim(), |i, j, k, l| {
            let g = |a, b, d| c.get(&[a, b, d, l]).unwrap().clone();
            &(&g(i, j, k) + &g(j, k, i)) + &g(k, i, j)
        })
    }

    /// `L(x,y)z = {x,y,z}` on the cyclic-bracket algebra, without checks.
    pub(crate) fn left_unchecked(&self) -> Representation {
        Representation::from_pairs0(self.cyclic_bracket(), self.dim(), |i, j| self.left0(i, j))
    }
}

/// The defining identities and the two derived ones, on basis elements.
///
/// Labels: `d2`, `d3` for the axioms, `derived_a`, `derived_b` for the consequences.
pub fn verify_prelie(p: &PreLieAlgebra) -> VerificationReport {
    let mut report = p.left_unchecked().verify();
    report.check = "prelie".into();
    let relabel = |label: &mut Option<String>| {
        if let Some(l) = label {
            *l = match l.as_str() {
                "i" => "d2".into(),
                "ii" => "d3".into(),
                other => other.to_string(),
            };
        }
    };
    if let Some(w) = report.witness.as_mut() {
        relabel(&mut w.equation);
    }
    for w in report.all_witnesses.iter_mut() {
        relabel(&mut w.equation);
    }
    report
}

fn require_prelie(p: &PreLieAlgebra) -> Result<()> {
    if verify_prelie(p).passed {
        Ok(())
    } else {
        Err(Error::Precondition("product is not a 3-pre-Lie algebra".into()))
    }
}

/// The sub-adjacent 3-Lie algebra with bracket `{x,y,z} + {y,z,x} + {z,x,y}`.
pub fn subadjacent(p: &PreLieAlgebra) -> Result<ThreeLieAlgebra> {
    require_prelie(p)?;
    Ok(p.cyclic_bracket())
}

/// `L(x,y)z = {x,y,z}` as a representation of the sub-adjacent algebra.
pub fn left_representation(p: &PreLieAlgebra) -> Result<Representation> {
    require_prelie(p)?;
    Ok(p.left_unchecked())
}

fn require_o_operator(t: &LinearOperator, a: &ThreeLieAlgebra, rep: &Representation) -> Result<()> {
    if verify_o_operator(t, a, rep)?.passed {
        Ok(())
    } else {
        Err(Error::Precondition("T is not an O-operator".into()))
    }
}

/// `{u,v,w} = ρ(Tu,Tv)w` on `V` for an O-operator `T`.
pub fn prelie_from_o_operator(t: &LinearOperator, a: &ThreeLieAlgebra, rep: &Representation) -> Result<PreLieAlgebra> {
    require_o_operator(t, a, rep)?;
    Ok(PreLieAlgebra { constants: module_products(t, rep, |i, j, k| (i, j, k)) })
}

/// Constants of `{u,v,w} = ρ(Tv,Tw)u`, the variant formula; not validated.
pub fn alternate_prelie_constants(t: &LinearOperator, a: &ThreeLieAlgebra, rep: &Representation) -> Result<Tensor> {
    check_shapes(t, a, rep)?;
    Ok(module_products(t, rep, |i, j, k| (j, k, i)))
}

/// `p[i][j][k] = ρ(T v_a, T v_b) v_c` where `(a,b,c) = pick(i,j,k)`.
fn module_products(t: &LinearOperator, rep: &Representation, pick: impl Fn(usize, usize, usize) -> (usize, usize, usize)) -> Tensor {
    let m = rep.module_dim();
    let images: Vec<Vector> = (0..m).map(|i| t.matrix.column(i + 1).unwrap()).collect();
    let mut rhos = vec![None; m * m];
    let mut out = Tensor::zeros(4, m);
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let (a, b, c) = pick(i, j, k);
                let rho: &Matrix =
                    rhos[a * m + b].get_or_insert_with(|| rep.rho_of(&images[a], &images[b]).unwrap());
                for l in 0..m {
                    let v = rho.entry(l, c);
                    if !v.is_zero() {
                        out.set(&[i + 1, j + 1, k + 1, l + 1], v.clone()).unwrap();
                    }
                }
            }
        }
    }
    out
}

/// `{x,y,z}_A = T ρ(x,y) T⁻¹ z` on `A` for an invertible O-operator.
pub fn compatible_prelie_from_invertible_o(
    t: &LinearOperator,
    a: &ThreeLieAlgebra,
    rep: &Representation,
) -> Result<PreLieAlgebra> {
    check_shapes(t, a, rep)?;
    if t.source_dim() != t.target_dim() {
        return Err(Error::Singular("T is not square".into()));
    }
    let inv = t.matrix.inverse()?;
    require_o_operator(t, a, rep)?;
    let n = a.dim();
    let mut out = Tensor::zeros(4, n);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let m = t.matrix.mul(&rep.rho0(i, j).mul(&inv)?)?;
            for k in 0..n {
                for l in 0..n {
                    let v = m.entry(l, k);
                    if !v.is_zero() {
                        out.set(&[i + 1, j + 1, k + 1, l + 1], v.clone())?;
                    }
                }
            }
        }
    }
    Ok(PreLieAlgebra { constants: out })
}

/// The compatible pre-Lie product with `B({x,y,z},w) = −B(z,[x,y,w])`.
pub fn prelie_from_form(a: &ThreeLieAlgebra, b: &BilinearForm) -> Result<PreLieAlgebra> {
    check_dim(a.dim(), b.dim())?;
    if !b.matrix().is_skew() {
        return Err(Error::InvalidArgument("form must be skew-symmetric".into()));
    }
    let solve = b.matrix().transpose().inverse().map_err(|_| Error::Singular("form is degenerate".into()))?;
    if !verify_3sb(a, b)?.passed {
        return Err(Error::Precondition("form fails the 3sb identity".into()));
    }
    let n = a.dim();
    let mut out = Tensor::zeros(4, n);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for k in 0..n {
                // g_w = −B(e_k, [e_i,e_j,e_w])
                let g: Vec<Scalar> =
                    (0..n).map(|w| -b.eval_basis_left(k, a.basis_bracket0(i, j, w).coords())).collect();
                let v = solve.apply(&Vector::from_vec(g))?;
                for (l, x) in v.coords().iter().enumerate() {
                    if !x.is_zero() {
                        out.set(&[i + 1, j + 1, k + 1, l + 1], x.clone())?;
                    }
                }
            }
        }
    }
    Ok(PreLieAlgebra { constants: out })
}

/// `B({x,y,z},w) + B(z,[x,y,w])` on all basis quadruples.
pub fn verify_form_prelie(a: &ThreeLieAlgebra, b: &BilinearForm, p: &PreLieAlgebra) -> Result<VerificationReport> {
    let n = a.dim();
    check_dim(n, b.dim())?;
    check_dim(n, p.dim())?;
    let mut ch = Checker::new("form_prelie");
    for q in crate::algebra::all_tuples(n, 4) {
        if ch.done() {
            break;
        }
        let (x, y, z, w) = (q[0], q[1], q[2], q[3]);
        let e = |i: usize| Vector::basis(i + 1, n).unwrap();
        let lhs = b.eval_basis_right(p.product(&e(x), &e(y), &e(z))?.coords(), w);
        let rhs = b.eval_basis_left(z, a.basis_bracket0(x, y, w).coords());
        ch.scalar(&[x + 1, y + 1, z + 1, w + 1], &(&lhs + &rhs), None);
    }
    Ok(ch.finish())
}

/// The algebra `A ⋉_{L*} A*` over the sub-adjacent algebra and `r = Σ e_i⊗e_i* − e_i*⊗e_i`.
pub fn canonical_r(p: &PreLieAlgebra) -> Result<(ThreeLieAlgebra, RElement)> {
    let left = left_representation(p)?;
    let big = left.dual().semidirect_unchecked();
    let n = p.dim();
    let mut r = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        *r.entry_mut(i, n + i) = Scalar::one();
        *r.entry_mut(n + i, i) = -Scalar::one();
    }
    let r = RElement::new(big.clone(), r)?;
    Ok((big, r))
}
