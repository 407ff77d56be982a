//! Tensor products of complexes and the structural isomorphisms.
//!
//! Basis order of `(X*Y)_n`: blocks `X_p * Y_q` (p + q = n) by ascending
//! left degree `p`; inside a block the basis element `x_i * y_j` sits at
//! `j * rank(X_p) + i` (right factor major). The differential carries the
//! Koszul sign `d(x*y) = dx*y + (-1)^|x| x*dy`, and the symmetry carries
//! `(-1)^(|x||y|)`.

use std::sync::Arc;

use num_traits::Zero;

use super::complex::{ChainComplex, ChainMap};
use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Ring, Scalar};

/// Index bookkeeping for `X * Y`.
#[derive(Debug, Clone)]
pub struct TensorLayout {
    left: Vec<usize>,
    right: Vec<usize>,
}

impl TensorLayout {
    pub fn new(x: &ChainComplex, y: &ChainComplex) -> Self {
        TensorLayout {
            left: x.ranks().to_vec(),
            right: y.ranks().to_vec(),
        }
    }

    fn lrank(&self, p: usize) -> usize {
        self.left.get(p).copied().unwrap_or(0)
    }

    fn rrank(&self, q: usize) -> usize {
        self.right.get(q).copied().unwrap_or(0)
    }

    /// Number of degrees of the product complex.
    pub fn len(&self) -> usize {
        if self.left.is_empty() || self.right.is_empty() {
            0
        } else {
            self.left.len() + self.right.len() - 1
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn offset(&self, n: usize, p: usize) -> usize {
        (0..p)
            .map(|pp| self.lrank(pp) * n.checked_sub(pp).map_or(0, |q| self.rrank(q)))
            .sum()
    }

    pub fn rank(&self, n: usize) -> usize {
        (0..=n).map(|p| self.lrank(p) * self.rrank(n - p)).sum()
    }

    /// Position of `x_i * y_j` with `x_i` in degree `p`, `y_j` in degree `q`.
    pub fn index(&self, p: usize, i: usize, q: usize, j: usize) -> usize {
        self.offset(p + q, p) + j * self.lrank(p) + i
    }

    /// All basis elements `(p, i, q, j)` of degree `n`, in order.
    pub fn basis(&self, n: usize) -> Vec<(usize, usize, usize, usize)> {
        let mut out = Vec::with_capacity(self.rank(n));
        for p in 0..=n {
            let q = n - p;
            for j in 0..self.rrank(q) {
                for i in 0..self.lrank(p) {
                    out.push((p, i, q, j));
                }
            }
        }
        out
    }
}

fn sign(ring: Ring, negative: bool) -> Scalar {
    if negative {
        ring.from_i64(-1)
    } else {
        ring.one()
    }
}

pub fn tensor_complexes(x: &ChainComplex, y: &ChainComplex) -> Result<ChainComplex> {
    if x.ring() != y.ring() {
        return Err(Error::RingMismatch(x.ring().to_string(), y.ring().to_string()));
    }
    let ring = x.ring();
    let lay = TensorLayout::new(x, y);
    let top = lay.len();
    let ranks: Vec<usize> = (0..top).map(|n| lay.rank(n)).collect();
    let mut diffs = Vec::new();
    for n in 1..top {
        let mut d = Matrix::zeros(ring, ranks[n - 1], ranks[n]);
        for (col, (p, i, q, j)) in lay.basis(n).into_iter().enumerate() {
            if p >= 1 {
                let dx = x.d(p);
                for k in 0..dx.rows() {
                    let c = dx.get(k, i);
                    if !c.is_zero() {
                        d.add_to(lay.index(p - 1, k, q, j), col, c);
                    }
                }
            }
            if q >= 1 {
                let dy = y.d(q);
                let s = sign(ring, p % 2 == 1);
                for l in 0..dy.rows() {
                    let c = dy.get(l, j);
                    if !c.is_zero() {
                        d.add_to(lay.index(p, i, q - 1, l), col, &ring.mul(&s, c));
                    }
                }
            }
        }
        diffs.push(d);
    }
    ChainComplex::new(ring, ranks, diffs)
}

/// `f * g`, assembled block by block.
pub fn tensor_maps(
    f: &ChainMap,
    g: &ChainMap,
    source: &Arc<ChainComplex>,
    target: &Arc<ChainComplex>,
) -> Result<ChainMap> {
    if f.ring() != g.ring() {
        return Err(Error::RingMismatch(f.ring().to_string(), g.ring().to_string()));
    }
    let ring = f.ring();
    let src = TensorLayout::new(f.source(), g.source());
    let tgt = TensorLayout::new(f.target(), g.target());
    let top = source.len().max(target.len());
    let mut comps = Vec::with_capacity(top);
    for n in 0..top {
        let mut m = Matrix::zeros(ring, target.rank(n), source.rank(n));
        for (col, (p, i, q, j)) in src.basis(n).into_iter().enumerate() {
            let fp = f.component(p);
            let gq = g.component(q);
            for k in 0..fp.rows() {
                let a = fp.get(k, i);
                if a.is_zero() {
                    continue;
                }
                for l in 0..gq.rows() {
                    let b = gq.get(l, j);
                    if !b.is_zero() {
                        m.add_to(tgt.index(p, k, q, l), col, &ring.mul(a, b));
                    }
                }
            }
        }
        comps.push(m);
    }
    ChainMap::new(source.clone(), target.clone(), comps)
}

/// Builds a map between two tensor-shaped complexes that sends each basis
/// element to a signed basis element.
fn permutation_map(
    source: &Arc<ChainComplex>,
    target: &Arc<ChainComplex>,
    image: impl Fn(usize, usize) -> (usize, bool),
) -> Result<ChainMap> {
    let ring = source.ring();
    let comps = (0..source.len().max(target.len()))
        .map(|n| {
            let mut m = Matrix::zeros(ring, target.rank(n), source.rank(n));
            for col in 0..source.rank(n) {
                let (row, neg) = image(n, col);
                m.set(row, col, sign(ring, neg));
            }
            m
        })
        .collect();
    ChainMap::new(source.clone(), target.clone(), comps)
}

/// `tau: X*Y -> Y*X`
pub fn symmetry(
    x: &ChainComplex,
    y: &ChainComplex,
    xy: &Arc<ChainComplex>,
    yx: &Arc<ChainComplex>,
) -> Result<ChainMap> {
    let src = TensorLayout::new(x, y);
    let tgt = TensorLayout::new(y, x);
    permutation_map(xy, yx, |n, col| {
        let (p, i, q, j) = src.basis(n)[col];
        (tgt.index(q, j, p, i), (p * q) % 2 == 1)
    })
}

/// `alpha: X*(Y*Z) -> (X*Y)*Z`, or its inverse when `inverse` is set.
pub fn associator(
    x: &ChainComplex,
    y: &ChainComplex,
    z: &ChainComplex,
    x_yz: &Arc<ChainComplex>,
    xy_z: &Arc<ChainComplex>,
    inverse: bool,
) -> Result<ChainMap> {
    let yz = tensor_complexes(y, z)?;
    let xy = tensor_complexes(x, y)?;
    let l_yz = TensorLayout::new(y, z);
    let l_x_yz = TensorLayout::new(x, &yz);
    let l_xy = TensorLayout::new(x, y);
    let l_xy_z = TensorLayout::new(&xy, z);
    let top = x_yz.len();
    let mut forward: Vec<Vec<usize>> = (0..top).map(|n| vec![0; x_yz.rank(n)]).collect();
    for p in 0..x.len() {
        for q in 0..y.len() {
            for r in 0..z.len() {
                for i in 0..x.rank(p) {
                    for j in 0..y.rank(q) {
                        for k in 0..z.rank(r) {
                            let inner = l_yz.index(q, j, r, k);
                            let src = l_x_yz.index(p, i, q + r, inner);
                            let inner2 = l_xy.index(p, i, q, j);
                            let tgt = l_xy_z.index(p + q, inner2, r, k);
                            forward[p + q + r][src] = tgt;
                        }
                    }
                }
            }
        }
    }
    if inverse {
        let mut back: Vec<Vec<usize>> = (0..top).map(|n| vec![0; x_yz.rank(n)]).collect();
        for (n, f) in forward.iter().enumerate() {
            for (s, &t) in f.iter().enumerate() {
                back[n][t] = s;
            }
        }
        permutation_map(xy_z, x_yz, |n, col| (back[n][col], false))
    } else {
        permutation_map(x_yz, xy_z, |n, col| (forward[n][col], false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_offsets() {
        let z = Ring::Integers;
        let seg = ChainComplex::new(z, vec![2, 1], vec![Matrix::from_rows(z, &[&[1], &[-1]])]).unwrap();
        let lay = TensorLayout::new(&seg, &seg);
        assert_eq!((0..3).map(|n| lay.rank(n)).collect::<Vec<_>>(), vec![4, 4, 1]);
        // degree 1: bot*e, top*e, e*bot, e*top
        assert_eq!(lay.index(0, 0, 1, 0), 0);
        assert_eq!(lay.index(0, 1, 1, 0), 1);
        assert_eq!(lay.index(1, 0, 0, 0), 2);
        assert_eq!(lay.index(1, 0, 0, 1), 3);
        // degree 0: bot*bot, top*bot, bot*top, top*top
        assert_eq!(lay.index(0, 1, 0, 0), 1);
        assert_eq!(lay.index(0, 0, 0, 1), 2);
    }
}
