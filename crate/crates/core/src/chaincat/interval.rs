use std::sync::Arc;

use super::complex::{ChainComplex, ChainMap};
use super::tensor::tensor_complexes;
use crate::cocat::{Cocategory, Interval};
use crate::error::Result;
use crate::exactalg::{Matrix, Ring};

pub type ChainInterval = Interval<Arc<ChainComplex>, ChainMap>;

fn m(ring: Ring, rows: &[&[i64]]) -> Matrix {
    Matrix::from_rows(ring, rows)
}

/// Complex with two vertices and one edge, `d(e) = bot - top`.
pub fn segment(ring: Ring) -> Arc<ChainComplex> {
    Arc::new(ChainComplex::new(ring, vec![2, 1], vec![m(ring, &[&[1], &[-1]])]).expect("segment"))
}

/// Two edges glued end to start: `d(x, y) = (x, y - x, -y)`.
pub fn double_segment(ring: Ring) -> Arc<ChainComplex> {
    Arc::new(
        ChainComplex::new(ring, vec![3, 2], vec![m(ring, &[&[1, 0], &[-1, 1], &[0, -1]])]).expect("double segment"),
    )
}

fn map(src: &Arc<ChainComplex>, tgt: &Arc<ChainComplex>, comps: Vec<Matrix>) -> ChainMap {
    ChainMap::new(src.clone(), tgt.clone(), comps).expect("built-in chain map")
}

/// The invertible interval of chain complexes, with meet and join.
pub fn interval_i(ring: Ring) -> ChainInterval {
    let u = Arc::new(ChainComplex::unit(ring));
    let seg = segment(ring);
    let seg2 = double_segment(ring);
    let seg_sq = Arc::new(tensor_complexes(&seg, &seg).expect("I*I"));

    let bot = map(&u, &seg, vec![m(ring, &[&[1], &[0]])]);
    let top = map(&u, &seg, vec![m(ring, &[&[0], &[1]])]);
    let i = map(&seg, &u, vec![m(ring, &[&[1, 1]]), Matrix::zeros(ring, 0, 1)]);
    let down = map(
        &seg,
        &seg2,
        vec![m(ring, &[&[1, 0], &[0, 1], &[0, 0]]), m(ring, &[&[1], &[0]])],
    );
    let up = map(
        &seg,
        &seg2,
        vec![m(ring, &[&[0, 0], &[1, 0], &[0, 1]]), m(ring, &[&[0], &[1]])],
    );
    let star = map(
        &seg,
        &seg2,
        vec![m(ring, &[&[1, 0], &[0, 0], &[0, 1]]), m(ring, &[&[1], &[1]])],
    );
    let sigma = map(&seg, &seg, vec![m(ring, &[&[0, 1], &[1, 0]]), m(ring, &[&[-1]])]);

    // Degree 0 basis of I*I: bot*bot, top*bot, bot*top, top*top.
    // Degree 1 basis: bot*e, top*e, e*bot, e*top.
    let meet = map(
        &seg_sq,
        &seg,
        vec![
            m(ring, &[&[1, 1, 1, 0], &[0, 0, 0, 1]]),
            m(ring, &[&[0, 1, 0, 1]]),
            Matrix::zeros(ring, 0, 1),
        ],
    );
    let join = map(
        &seg_sq,
        &seg,
        vec![
            m(ring, &[&[1, 0, 0, 0], &[0, 1, 1, 1]]),
            m(ring, &[&[1, 0, 1, 0]]),
            Matrix::zeros(ring, 0, 1),
        ],
    );

    Interval::new(
        format!("chain-interval({ring})"),
        Cocategory {
            c0: u,
            c1: seg,
            c2: seg2,
            bot,
            top,
            i,
            down,
            up,
            star,
        },
    )
    .with_sigma(sigma)
    .with_lattice(meet, join)
}

/// Two distinct 2-cells bounded by the same square of 1-cells, with the
/// two squares `I*I -> C` that pick them out.
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub complex: Arc<ChainComplex>,
    pub phi: ChainMap,
    pub psi: ChainMap,
}

pub fn counterexample_c(ring: Ring) -> Result<Counterexample> {
    let seg = segment(ring);
    let seg_sq = Arc::new(tensor_complexes(&seg, &seg)?);
    let d1 = m(ring, &[&[1, 0, 1, 0], &[0, 1, -1, 0], &[-1, 0, 0, 1], &[0, -1, 0, -1]]);
    let d2 = m(ring, &[&[1, 1], &[-1, -1], &[-1, -1], &[1, 1]]);
    let complex = Arc::new(ChainComplex::new(ring, vec![4, 4, 2], vec![d1, d2])?);
    let ident = |n| Matrix::identity(ring, n);
    let phi = ChainMap::new(
        seg_sq.clone(),
        complex.clone(),
        vec![ident(4), ident(4), m(ring, &[&[1], &[0]])],
    )?;
    let psi = ChainMap::new(
        seg_sq,
        complex.clone(),
        vec![ident(4), ident(4), m(ring, &[&[0], &[1]])],
    )?;
    Ok(Counterexample { complex, phi, psi })
}

/// Copy of `I` with the cocomposition corrupted to `(x, y) -> (x, y, 0)` in
/// degree 0; used to exercise failing reports.
pub fn corrupted_interval_i(ring: Ring) -> ChainInterval {
    let mut iv = interval_i(ring);
    let c = &iv.cocat;
    // Degree 1 must still commute, so it is moved along with degree 0.
    iv.cocat.star = map(
        &c.c1,
        &c.c2,
        vec![m(ring, &[&[1, 0], &[0, 1], &[0, 0]]), m(ring, &[&[1], &[0]])],
    );
    iv.name = format!("chain-interval-corrupted({ring})");
    iv
}
