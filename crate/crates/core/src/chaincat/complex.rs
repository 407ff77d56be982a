use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Ring};

/// Non-negatively graded complex of finitely generated free modules.
/// `diffs[k]` is the differential from degree `k + 1` to degree `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainComplex {
    ring: Ring,
    ranks: Vec<usize>,
    diffs: Vec<Matrix>,
}

impl ChainComplex {
    /// `diffs` lists d_1, d_2, ... ; trailing zero degrees are trimmed.
    pub fn new(ring: Ring, ranks: Vec<usize>, diffs: Vec<Matrix>) -> Result<Self> {
        if diffs.len() + 1 != ranks.len().max(1) {
            return Err(Error::NotAComplex(format!(
                "{} degrees need {} differentials, got {}",
                ranks.len(),
                ranks.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.ring() != ring {
                return Err(Error::RingMismatch(ring.to_string(), d.ring().to_string()));
            }
            if d.shape() != (ranks[k], ranks[k + 1]) {
                return Err(Error::NotAComplex(format!(
                    "d_{} has shape {:?}, expected {:?}",
                    k + 1,
                    d.shape(),
                    (ranks[k], ranks[k + 1])
                )));
            }
        }
        for k in 1..diffs.len() {
            if !diffs[k - 1].mul(&diffs[k])?.is_zero() {
                return Err(Error::NotAComplex(format!("d_{} d_{} != 0", k, k + 1)));
            }
        }
        let mut c = ChainComplex { ring, ranks, diffs };
        while c.ranks.last() == Some(&0) {
            c.ranks.pop();
            c.diffs.pop();
        }
        Ok(c)
    }

    /// R concentrated in degree 0: the tensor unit.
    pub fn unit(ring: Ring) -> Self {
        ChainComplex {
            ring,
            ranks: vec![1],
            diffs: vec![],
        }
    }

    pub fn zero(ring: Ring) -> Self {
        ChainComplex {
            ring,
            ranks: vec![],
            diffs: vec![],
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Number of stored degrees (one past the top nonzero degree).
    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn rank(&self, n: usize) -> usize {
        self.ranks.get(n).copied().unwrap_or(0)
    }

    /// d_n: degree n -> degree n-1, for n >= 1.
    pub fn d(&self, n: usize) -> Matrix {
        assert!(n >= 1, "d_0 is not defined");
        match self.diffs.get(n - 1) {
            Some(m) => m.clone(),
            None => Matrix::zeros(self.ring, self.rank(n - 1), self.rank(n)),
        }
    }

    pub fn direct_sum(&self, other: &ChainComplex) -> Result<ChainComplex> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.to_string(), other.ring.to_string()));
        }
        let top = self.len().max(other.len());
        let ranks = (0..top).map(|n| self.rank(n) + other.rank(n)).collect();
        let diffs = (1..top)
            .map(|n| self.d(n).block_diag(&other.d(n)))
            .collect::<Result<_>>()?;
        ChainComplex::new(self.ring, ranks, diffs)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "ring": self.ring.to_string(),
            "ranks": self.ranks,
            "differentials": self.diffs.iter().map(Matrix::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Degree-preserving map of complexes, checked to commute with the
/// differentials on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainMap {
    source: Arc<ChainComplex>,
    target: Arc<ChainComplex>,
    comps: Vec<Matrix>,
}

impl ChainMap {
    pub fn new(source: Arc<ChainComplex>, target: Arc<ChainComplex>, comps: Vec<Matrix>) -> Result<Self> {
        let ring = source.ring();
        if target.ring() != ring {
            return Err(Error::RingMismatch(ring.to_string(), target.ring().to_string()));
        }
        let top = source.len().max(target.len());
        if comps.len() > top && comps[top..].iter().any(|m| m.rows() * m.cols() != 0) {
            return Err(Error::NotAChainMap("components beyond the top degree".into()));
        }
        let mut full = Vec::with_capacity(top);
        for n in 0..top {
            let m = comps
                .get(n)
                .cloned()
                .unwrap_or_else(|| Matrix::zeros(ring, target.rank(n), source.rank(n)));
            if m.shape() != (target.rank(n), source.rank(n)) {
                return Err(Error::NotAChainMap(format!(
                    "component {n} has shape {:?}, expected {:?}",
                    m.shape(),
                    (target.rank(n), source.rank(n))
                )));
            }
            if m.ring() != ring {
                return Err(Error::RingMismatch(ring.to_string(), m.ring().to_string()));
            }
            full.push(m);
        }
        for n in 1..top {
            let lhs = target.d(n).mul(&full[n])?;
            let rhs = full[n - 1].mul(&source.d(n))?;
            if lhs != rhs {
                return Err(Error::NotAChainMap(format!("square at degree {n} does not commute")));
            }
        }
        Ok(ChainMap {
            source,
            target,
            comps: full,
        })
    }

    pub fn identity(c: &Arc<ChainComplex>) -> Self {
        let comps = (0..c.len()).map(|n| Matrix::identity(c.ring(), c.rank(n))).collect();
        ChainMap {
            source: c.clone(),
            target: c.clone(),
            comps,
        }
    }

    pub fn zero(source: &Arc<ChainComplex>, target: &Arc<ChainComplex>) -> Self {
        let ring = source.ring();
        let top = source.len().max(target.len());
        let comps = (0..top)
            .map(|n| Matrix::zeros(ring, target.rank(n), source.rank(n)))
            .collect();
        ChainMap {
            source: source.clone(),
            target: target.clone(),
            comps,
        }
    }

    pub fn source(&self) -> &Arc<ChainComplex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<ChainComplex> {
        &self.target
    }

    pub fn ring(&self) -> Ring {
        self.source.ring()
    }

    pub fn component(&self, n: usize) -> Matrix {
        match self.comps.get(n) {
            Some(m) => m.clone(),
            None => Matrix::zeros(self.ring(), self.target.rank(n), self.source.rank(n)),
        }
    }

    pub fn components(&self) -> &[Matrix] {
        &self.comps
    }

    /// `self . other`
    pub fn after(&self, other: &ChainMap) -> Result<ChainMap> {
        if other.target != self.source {
            return Err(Error::TypeMismatch("chain map composite is not composable".into()));
        }
        let top = other.source.len().max(self.target.len());
        let comps = (0..top)
            .map(|n| self.component(n).mul(&other.component(n)))
            .collect::<Result<_>>()?;
        ChainMap::new(other.source.clone(), self.target.clone(), comps)
    }

    pub fn add(&self, other: &ChainMap) -> Result<ChainMap> {
        self.same_type(other)?;
        let comps = (0..self.comps.len())
            .map(|n| self.comps[n].add(&other.comps[n]))
            .collect::<Result<_>>()?;
        ChainMap::new(self.source.clone(), self.target.clone(), comps)
    }

    pub fn neg(&self) -> ChainMap {
        ChainMap {
            comps: self.comps.iter().map(Matrix::neg).collect(),
            ..self.clone()
        }
    }

    pub fn same_type(&self, other: &ChainMap) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::TypeMismatch("chain maps have different types".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "source_ranks": self.source.ranks(),
            "target_ranks": self.target.ranks(),
            "components": self.comps.iter().map(Matrix::to_json).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn segment(ring: Ring) -> Arc<ChainComplex> {
        Arc::new(ChainComplex::new(ring, vec![2, 1], vec![Matrix::from_rows(ring, &[&[1], &[-1]])]).unwrap())
    }

    #[test]
    fn rejects_nonzero_square() {
        let z = Ring::Integers;
        let d1 = Matrix::from_rows(z, &[&[1]]);
        let d2 = Matrix::from_rows(z, &[&[1]]);
        assert!(matches!(
            ChainComplex::new(z, vec![1, 1, 1], vec![d1, d2]),
            Err(Error::NotAComplex(_))
        ));
    }

    #[test]
    fn trailing_zero_degrees_are_trimmed() {
        let z = Ring::Integers;
        let c = ChainComplex::new(z, vec![1, 0], vec![Matrix::zeros(z, 1, 0)]).unwrap();
        assert_eq!(c, ChainComplex::unit(z));
    }

    #[test]
    fn chain_condition_is_enforced() {
        let z = Ring::Integers;
        let seg = segment(z);
        let bad = vec![Matrix::identity(z, 2), Matrix::from_rows(z, &[&[2]])];
        assert!(matches!(
            ChainMap::new(seg.clone(), seg.clone(), bad),
            Err(Error::NotAChainMap(_))
        ));
        let swap = vec![
            Matrix::from_rows(z, &[&[0, 1], &[1, 0]]),
            Matrix::from_rows(z, &[&[-1]]),
        ];
        let s = ChainMap::new(seg.clone(), seg.clone(), swap).unwrap();
        assert_eq!(s.after(&s).unwrap(), ChainMap::identity(&seg));
    }
}
