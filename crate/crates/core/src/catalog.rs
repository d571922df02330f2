//! The classified low-dimensional 3-Lie algebras and worked examples.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Bracket, ThreeLieAlgebra};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::{wedge3, Tensor};
use crate::yang_baxter::Comultiplication;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogTag {
    Dim3,
    /// class 1..=7 of the 4-dimensional classification
    Dim4(u8),
    Trivial(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogId {
    tag: CatalogTag,
    alpha: Option<Scalar>,
}

impl CatalogId {
    pub fn new(tag: CatalogTag, alpha: Option<Scalar>) -> Result<Self> {
        match &tag {
            CatalogTag::Dim4(c) if !(1..=7).contains(c) => {
                return Err(Error::InvalidArgument(format!("unknown 4-dimensional class {c}")))
            }
            CatalogTag::Trivial(0) => return Err(Error::InvalidArgument("trivial algebra needs dimension ≥ 1".into())),
            _ => {}
        }
        let needs_alpha = tag == CatalogTag::Dim4(6);
        match (&alpha, needs_alpha) {
            (None, true) => Err(Error::InvalidArgument("class dim4.6 requires alpha".into())),
            (Some(a), true) if a.is_zero() => Err(Error::InvalidArgument("alpha must be nonzero".into())),
            (Some(_), false) => Err(Error::InvalidArgument("alpha is only accepted for dim4.6".into())),
            _ => Ok(CatalogId { tag, alpha }),
        }
    }

    /// Parses `dim3`, `dim4.1` … `dim4.7` or `trivial:n`.
    pub fn parse(s: &str, alpha: Option<Scalar>) -> Result<Self> {
        let tag = if s == "dim3" {
            CatalogTag::Dim3
        } else if let Some(c) = s.strip_prefix("dim4.") {
            CatalogTag::Dim4(c.parse().map_err(|_| Error::Parse(format!("unknown catalog id {s:?}")))?)
        } else if let Some(n) = s.strip_prefix("trivial:") {
            CatalogTag::Trivial(n.parse().map_err(|_| Error::Parse(format!("bad dimension in {s:?}")))?)
        } else {
            return Err(Error::Parse(format!("unknown catalog id {s:?}")));
        };
        Self::new(tag, alpha)
    }

    pub fn tag(&self) -> &CatalogTag {
        &self.tag
    }

    pub fn alpha(&self) -> Option<&Scalar> {
        self.alpha.as_ref()
    }

    /// Every id except `trivial:n`, with the given alpha for class 6.
    pub fn all_nontrivial(alpha: Scalar) -> Vec<CatalogId> {
        let mut ids = vec![CatalogId { tag: CatalogTag::Dim3, alpha: None }];
        for c in 1..=7 {
            let alpha = (c == 6).then(|| alpha.clone());
            ids.push(CatalogId { tag: CatalogTag::Dim4(c), alpha });
        }
        ids
    }
}

impl FromStr for CatalogId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, None)
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.tag {
            CatalogTag::Dim3 => write!(f, "dim3"),
            CatalogTag::Dim4(c) => write!(f, "dim4.{c}"),
            CatalogTag::Trivial(n) => write!(f, "trivial:{n}"),
        }
    }
}

fn one() -> Scalar {
    Scalar::one()
}

pub fn get_algebra(id: &CatalogId) -> ThreeLieAlgebra {
    let b = |brackets: &[Bracket], n| {
        ThreeLieAlgebra::from_brackets(n, brackets).expect("catalog brackets are well formed")
    };
    match &id.tag {
        CatalogTag::Dim3 => b(&[([1, 2, 3], vec![(1, one())])], 3),
        CatalogTag::Trivial(n) => ThreeLieAlgebra::zero(*n),
        CatalogTag::Dim4(c) => {
            let list = match c {
                1 => vec![
                    ([1, 2, 3], vec![(4, one())]),
                    ([2, 3, 4], vec![(1, one())]),
                    ([1, 3, 4], vec![(2, one())]),
                    ([1, 2, 4], vec![(3, one())]),
                ],
                2 => vec![([1, 2, 3], vec![(1, one())])],
                3 => vec![([2, 3, 4], vec![(1, one())])],
                4 => vec![([2, 3, 4], vec![(1, one())]), ([1, 3, 4], vec![(2, one())])],
                5 => vec![([2, 3, 4], vec![(2, one())]), ([1, 3, 4], vec![(1, one())])],
                6 => {
                    let alpha = id.alpha.clone().expect("validated");
                    vec![([2, 3, 4], vec![(1, alpha), (2, one())]), ([1, 3, 4], vec![(2, one())])]
                }
                _ => vec![
                    ([2, 3, 4], vec![(1, one())]),
                    ([1, 3, 4], vec![(2, one())]),
                    ([1, 2, 4], vec![(3, one())]),
                ],
            };
            b(&list, 4)
        }
    }
}

/// Class (1) with `Δ(e1)=e2∧e3∧e4`, `Δ(e2)=e1∧e3∧e4`, `Δ(e3)=e1∧e2∧e4`, `Δ(e4)=e1∧e2∧e3`.
pub fn get_paper_bialgebra() -> (ThreeLieAlgebra, Comultiplication) {
    let a = get_algebra(&CatalogId { tag: CatalogTag::Dim4(1), alpha: None });
    let images = [[2, 3, 4], [1, 3, 4], [1, 2, 4], [1, 2, 3]].map(|[i, j, k]| wedge3(i, j, k, 4).unwrap());
    let delta = Comultiplication::from_images(a.clone(), &images).unwrap();
    (a, delta)
}

/// `Δ(e1) = −r23² w`, `Δ(e2) = r13 r23 w`, `Δ(e3) = −r12 r23 w` with `w = e1∧e2∧e3`.
pub fn dim3_delta_closed_form(r12: &Scalar, r13: &Scalar, r23: &Scalar) -> Comultiplication {
    let a = get_algebra(&CatalogId { tag: CatalogTag::Dim3, alpha: None });
    let w = wedge3(1, 2, 3, 3).unwrap();
    let coeffs = [-(r23 * r23), r13 * r23, -(r12 * r23)];
    let images: Vec<Tensor> = coeffs.iter().map(|c| w.scale(c)).collect();
    Comultiplication::from_images(a, &images).unwrap()
}
