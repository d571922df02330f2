//! Dense order-k tensors over [`Scalar`] with 1-based component access.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{check_dim, check_index, Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::scalar::Scalar;

/// Element of `(F^n)^{⊗k}` stored row-major, first slot slowest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    order: usize,
    dim: usize,
    data: Vec<Scalar>,
}

impl Tensor {
    pub fn zeros(order: usize, dim: usize) -> Self {
        assert!(dim >= 1, "tensor dimension must be positive");
        Tensor { order, dim, data: vec![Scalar::zero(); dim.pow(order as u32)] }
    }

    pub fn from_vec(order: usize, dim: usize, data: Vec<Scalar>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument("tensor dimension must be positive".into()));
        }
        check_dim(dim.pow(order as u32), data.len())?;
        Ok(Tensor { order, dim, data })
    }

    /// Builds a tensor from a function of 1-based multi-indices.
    pub fn from_fn(order: usize, dim: usize, mut f: impl FnMut(&[usize]) -> Scalar) -> Self {
        let mut t = Tensor::zeros(order, dim);
        let mut idx = vec![1; order];
        for flat in 0..t.data.len() {
            t.unravel_into(flat, &mut idx);
            for k in idx.iter_mut() {
                *k += 1;
            }
            t.data[flat] = f(&idx);
        }
        t
    }

    /// The basis tensor `e_{i1}⊗…⊗e_{ik}`.
    pub fn basis(idx: &[usize], dim: usize) -> Result<Self> {
        let mut t = Tensor::zeros(idx.len(), dim);
        t.set(idx, Scalar::one())?;
        Ok(t)
    }

    /// Rank-one tensor `v1⊗…⊗vk`.
    pub fn outer(vectors: &[&Vector]) -> Result<Self> {
        let Some(first) = vectors.first() else {
            return Err(Error::InvalidArgument("outer product of no vectors".into()));
        };
        let mut t = Tensor::from_vector(first);
        for v in &vectors[1..] {
            t = t.tensor_product(&Tensor::from_vector(v))?;
        }
        Ok(t)
    }

    pub fn from_vector(v: &Vector) -> Self {
        Tensor { order: 1, dim: v.dim(), data: v.coords().to_vec() }
    }

    pub fn to_vector(&self) -> Result<Vector> {
        if self.order != 1 {
            return Err(Error::InvalidArgument(format!("order {} tensor is not a vector", self.order)));
        }
        Ok(Vector::from_vec(self.data.clone()))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    fn offset(&self, idx: &[usize]) -> Result<usize> {
        check_dim(self.order, idx.len())?;
        let mut flat = 0;
        for &i in idx {
            check_index(i, self.dim)?;
            flat = flat * self.dim + (i - 1);
        }
        Ok(flat)
    }

    /// Writes the 0-based multi-index of `flat` into `idx`.
    pub(crate) fn unravel_into(&self, mut flat: usize, idx: &mut [usize]) {
        for slot in (0..self.order).rev() {
            idx[slot] = flat % self.dim;
            flat /= self.dim;
        }
    }

    /// Stride of a 0-based slot in the flat layout.
    pub(crate) fn stride(&self, slot: usize) -> usize {
        self.dim.pow((self.order - 1 - slot) as u32)
    }

    pub fn get(&self, idx: &[usize]) -> Result<&Scalar> {
        Ok(&self.data[self.offset(idx)?])
    }

    pub fn set(&mut self, idx: &[usize], value: Scalar) -> Result<()> {
        let k = self.offset(idx)?;
        self.data[k] = value;
        Ok(())
    }

    pub fn add_at(&mut self, idx: &[usize], value: &Scalar) -> Result<()> {
        let k = self.offset(idx)?;
        self.data[k] += value;
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|c| !c.is_zero()).count()
    }

    /// Nonzero components in layout order, with 1-based indices.
    pub fn nonzeros(&self) -> impl Iterator<Item = (Vec<usize>, &Scalar)> + '_ {
        let mut idx = vec![0; self.order];
        self.data.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(flat, c)| {
            self.unravel_into(flat, &mut idx);
            (idx.iter().map(|i| i + 1).collect(), c)
        })
    }

    pub fn first_nonzero(&self) -> Option<(Vec<usize>, &Scalar)> {
        self.nonzeros().next()
    }

    pub fn scale(&self, s: &Scalar) -> Tensor {
        let data = if s.is_zero() {
            vec![Scalar::zero(); self.data.len()]
        } else {
            self.data.iter().map(|c| if c.is_zero() { Scalar::zero() } else { c * s }).collect()
        };
        Tensor { order: self.order, dim: self.dim, data }
    }

    pub fn tensor_product(&self, other: &Tensor) -> Result<Tensor> {
        check_dim(self.dim, other.dim)?;
        let mut data = Vec::with_capacity(self.data.len() * other.data.len());
        for a in &self.data {
            for b in &other.data {
                data.push(if a.is_zero() { Scalar::zero() } else { a * b });
            }
        }
        Ok(Tensor { order: self.order + other.order, dim: self.dim, data })
    }

    /// Reorders slots: slot `t` of the result is slot `perm[t]` of `self` (0-based).
    pub fn permute_slots(&self, perm: &[usize]) -> Result<Tensor> {
        check_dim(self.order, perm.len())?;
        let mut seen = vec![false; self.order];
        for &p in perm {
            if p >= self.order || seen[p] {
                return Err(Error::InvalidArgument(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        let strides: Vec<usize> = (0..self.order).map(|s| self.stride(s)).collect();
        let mut out = Tensor::zeros(self.order, self.dim);
        let mut idx = vec![0; self.order];
        for flat in 0..out.data.len() {
            out.unravel_into(flat, &mut idx);
            let src: usize = idx.iter().zip(perm).map(|(i, &p)| i * strides[p]).sum();
            out.data[flat] = self.data[src].clone();
        }
        Ok(out)
    }

    /// The switching operator `σ_ij` exchanging slots `i < j` (1-based).
    pub fn switching(&self, i: usize, j: usize) -> Result<Tensor> {
        if self.order < 2 {
            return Err(Error::InvalidArgument("switching needs order at least 2".into()));
        }
        check_index(i, self.order)?;
        check_index(j, self.order)?;
        if i >= j {
            return Err(Error::InvalidArgument(format!("switching positions must satisfy i < j, got ({i},{j})")));
        }
        let mut perm: Vec<usize> = (0..self.order).collect();
        perm.swap(i - 1, j - 1);
        self.permute_slots(&perm)
    }

    /// `t ⊗_pos a`: inserts `a` so that it occupies slot `pos` (1-based) of the result.
    pub fn insert_at(&self, a: &Vector, pos: usize) -> Result<Tensor> {
        check_dim(self.dim, a.dim())?;
        check_index(pos, self.order + 1)?;
        let appended = self.tensor_product(&Tensor::from_vector(a))?;
        let mut perm: Vec<usize> = (0..self.order).collect();
        perm.insert(pos - 1, self.order);
        appended.permute_slots(&perm)
    }

    /// Applies the linear map `m` to slot `slot` (1-based), identity elsewhere.
    pub fn apply_to_slot(&self, slot: usize, m: &Matrix) -> Result<Tensor> {
        check_index(slot, self.order)?;
        check_dim(self.dim, m.rows())?;
        check_dim(self.dim, m.cols())?;
        let s = self.stride(slot - 1);
        let n = self.dim;
        let mut out = Tensor::zeros(self.order, n);
        for (flat, v) in self.data.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let b = (flat / s) % n;
            let base = flat - b * s;
            for a in 0..n {
                let mab = m.entry(a, b);
                if !mab.is_zero() {
                    out.data[base + a * s] += &(mab * v);
                }
            }
        }
        Ok(out)
    }

    /// Pairs slot `slot` (1-based) with the covector `xi`, lowering the order by one.
    pub fn contract_slot(&self, slot: usize, xi: &Vector) -> Result<Tensor> {
        check_index(slot, self.order)?;
        check_dim(self.dim, xi.dim())?;
        if self.order == 1 {
            return Err(Error::InvalidArgument("contraction would produce an order-0 tensor".into()));
        }
        let n = self.dim;
        let s = self.stride(slot - 1);
        let mut out = Tensor::zeros(self.order - 1, n);
        for (flat, v) in self.data.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let b = (flat / s) % n;
            let w = &xi.coords()[b];
            if w.is_zero() {
                continue;
            }
            let high = flat / (s * n);
            let low = flat % s;
            out.data[high * s + low] += &(v * w);
        }
        Ok(out)
    }

    /// Whether exchanging slots `i < j` negates the tensor.
    pub fn is_antisymmetric_in(&self, i: usize, j: usize) -> Result<bool> {
        Ok(self.switching(i, j)? == -self)
    }
}

/// `e_i∧e_j∧e_k` as the unnormalized signed sum over the six permutations.
pub fn wedge3(i: usize, j: usize, k: usize, n: usize) -> Result<Tensor> {
    for x in [i, j, k] {
        check_index(x, n)?;
    }
    let mut t = Tensor::zeros(3, n);
    let args = [i, j, k];
    const PERMS: [([usize; 3], i64); 6] = [
        ([0, 1, 2], 1),
        ([1, 2, 0], 1),
        ([2, 0, 1], 1),
        ([1, 0, 2], -1),
        ([0, 2, 1], -1),
        ([2, 1, 0], -1),
    ];
    for (p, sign) in PERMS {
        t.add_at(&[args[p[0]], args[p[1]], args[p[2]]], &Scalar::from_int(sign))?;
    }
    Ok(t)
}

impl<'a> Add<&'a Tensor> for &'a Tensor {
    type Output = Tensor;
    /// Panics on shape mismatch.
    fn add(self, rhs: &Tensor) -> Tensor {
        assert_eq!((self.order, self.dim), (rhs.order, rhs.dim), "tensor shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Tensor { order: self.order, dim: self.dim, data }
    }
}

impl<'a> Sub<&'a Tensor> for &'a Tensor {
    type Output = Tensor;
    /// Panics on shape mismatch.
    fn sub(self, rhs: &Tensor) -> Tensor {
        assert_eq!((self.order, self.dim), (rhs.order, rhs.dim), "tensor shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Tensor { order: self.order, dim: self.dim, data }
    }
}

impl Neg for &Tensor {
    type Output = Tensor;
    fn neg(self) -> Tensor {
        Tensor { order: self.order, dim: self.dim, data: self.data.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (idx, c) in self.nonzeros() {
            if any {
                f.write_str(" + ")?;
            }
            any = true;
            let basis: Vec<String> = idx.iter().map(|i| format!("e{i}")).collect();
            write!(f, "({c}) {}", basis.join("⊗"))?;
        }
        if !any {
            f.write_str("0")?;
        }
        Ok(())
    }
}
