#![allow(dead_code)]

use trilie::*;

pub fn alg(id: &str) -> ThreeLieAlgebra {
    get_algebra(&id.parse().unwrap())
}

pub fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

pub fn r_from(a: &ThreeLieAlgebra, rows: &[Vec<i64>]) -> RElement {
    let rows: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    RElement::new(a.clone(), Matrix::from_int_rows(&rows).unwrap()).unwrap()
}

pub fn skew_from(a: &ThreeLieAlgebra, upper: &[i64]) -> RElement {
    let n = a.dim();
    let pos = |i: usize, j: usize| (i - 1) * (2 * n - i) / 2 + (j - i - 1);
    let m = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Less => s(upper[pos(i, j)]),
        std::cmp::Ordering::Greater => s(-upper[pos(j, i)]),
        std::cmp::Ordering::Equal => s(0),
    });
    RElement::new(a.clone(), m).unwrap()
}

/// Bracket of plain coordinate vectors.
pub fn br(a: &ThreeLieAlgebra, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
    let v = |c: &[Scalar]| Vector::from_vec(c.to_vec());
    a.bracket(&v(x), &v(y), &v(z)).unwrap().into_coords()
}

pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
    (0..n).map(|t| if t == i { s(1) } else { s(0) }).collect()
}

pub fn scaled(v: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| x * c).collect()
}

/// `r` as a list of rank-one terms `x_i ⊗ y_i`.
pub fn rank_one_terms(r: &RElement) -> Vec<(Vec<Scalar>, Vec<Scalar>)> {
    let n = r.dim();
    let mut out = Vec::new();
    for p in 0..n {
        for q in 0..n {
            let c = r.matrix().get(p + 1, q + 1).unwrap();
            if !c.is_zero() {
                out.push((scaled(&unit(n, p), c), unit(n, q)));
            }
        }
    }
    out
}

pub fn outer(vs: &[&[Scalar]]) -> Tensor {
    let vs: Vec<Vector> = vs.iter().map(|v| Vector::from_vec(v.to_vec())).collect();
    let refs: Vec<&Vector> = vs.iter().collect();
    Tensor::outer(&refs).unwrap()
}

pub fn rrr_oracle(r: &RElement) -> Tensor {
    let a = r.algebra();
    let terms = rank_one_terms(r);
    let mut t = Tensor::zeros(4, r.dim());
    for (xi, yi) in &terms {
        for (xj, yj) in &terms {
            for (xk, yk) in &terms {
                t = &t + &outer(&[&br(a, xi, xj, xk), yi, yj, yk]);
                t = &t + &outer(&[xi, &br(a, yi, xj, xk), yj, yk]);
                t = &t + &outer(&[xi, xj, &br(a, yi, yj, xk), yk]);
                t = &t + &outer(&[xi, xj, xk, &br(a, yi, yj, yk)]);
            }
        }
    }
    t
}

/// The three images of a basis element straight from the defining sums.
pub fn delta_oracle(r: &RElement, m: usize) -> [Tensor; 3] {
    let a = r.algebra();
    let n = r.dim();
    let x = unit(n, m);
    let terms = rank_one_terms(r);
    let mut out = [Tensor::zeros(3, n), Tensor::zeros(3, n), Tensor::zeros(3, n)];
    for (xi, yi) in &terms {
        for (xj, yj) in &terms {
            let b = br(a, &x, xi, xj);
            out[0] = &out[0] + &outer(&[&b, yj, yi]);
            out[1] = &out[1] + &outer(&[yi, &b, yj]);
            out[2] = &out[2] + &outer(&[yj, yi, &b]);
        }
    }
    out
}

