//! Per-shape sign-imbalance and the polynomials built from it.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::MonomialMap;
use crate::shape::{partitions, Shape};
use crate::tableau::SytWalker;

/// Sign-imbalance of a shape together with its domino statistics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImbalanceRecord {
    pub shape: Shape,
    pub imbalance: i64,
    pub v: usize,
    pub h: usize,
    pub d: usize,
    pub vs: usize,
    pub hs: usize,
    pub black: usize,
    pub white: usize,
}

impl ImbalanceRecord {
    /// Statistics of `shape` paired with an already computed imbalance.
    pub fn with_imbalance(shape: Shape, imbalance: i64) -> Self {
        let (black, white) = shape.color_counts();
        ImbalanceRecord {
            v: shape.v_count(),
            h: shape.h_count(),
            d: shape.d_count(),
            vs: shape.vs_count(),
            hs: shape.hs_count(),
            black,
            white,
            imbalance,
            shape,
        }
    }

    pub fn compute(shape: Shape) -> Result<Self> {
        let i = imbalance_chess(&shape)?;
        Ok(Self::with_imbalance(shape, i))
    }
}

fn signed_sum(mut walker: SytWalker) -> Result<i64> {
    let mut total: i64 = 0;
    while walker.advance() {
        total = total
            .checked_add(walker.sign().value())
            .ok_or(Error::Overflow("imbalance accumulator"))?;
    }
    Ok(total)
}

/// Sum of signs over all standard Young tableaux of `shape`.
pub fn imbalance(shape: &Shape) -> Result<i64> {
    signed_sum(SytWalker::new(shape, false))
}

/// Sum of signs over the chess tableaux of `shape`. Non-chess tableaux cancel
/// in pairs, so this equals [`imbalance`] while visiting far fewer leaves.
pub fn imbalance_chess(shape: &Shape) -> Result<i64> {
    signed_sum(SytWalker::new(shape, true))
}

/// One record per partition of `n`, in enumeration order.
pub fn imbalance_table(n: usize) -> Result<Vec<ImbalanceRecord>> {
    let shapes: Vec<Shape> = partitions(n).collect();
    shapes.into_par_iter().map(ImbalanceRecord::compute).collect()
}

/// `sum over shapes of I * q^v * t^d * x^h` for the given records.
pub fn stanley_polynomial_of(records: &[ImbalanceRecord]) -> Result<MonomialMap> {
    let mut p = MonomialMap::zero();
    for r in records {
        p.add_term((r.v as u32, r.d as u32, r.h as u32), r.imbalance)?;
    }
    Ok(p)
}

pub fn stanley_polynomial(n: usize) -> Result<MonomialMap> {
    stanley_polynomial_of(&imbalance_table(n)?)
}

/// `(q + x)^floor(n/2)`.
pub fn expected_polynomial(n: usize) -> Result<MonomialMap> {
    MonomialMap::q_plus_x_pow((n / 2) as u32)
}
