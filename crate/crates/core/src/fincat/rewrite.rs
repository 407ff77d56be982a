//! String rewriting over generator indices with bounded Knuth-Bendix
//! completion. Words are read left to right (diagrammatic order); rules are
//! oriented by shortlex on generator indices.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

pub type Word = Vec<usize>;

/// Shortlex: shorter words are smaller, ties broken lexicographically.
pub fn shortlex(a: &[usize], b: &[usize]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RewriteSystem {
    rules: Vec<(Word, Word)>,
    by_last: HashMap<usize, Vec<usize>>,
}

/// Bounds for completion and normalization.
#[derive(Debug, Clone, Copy)]
pub struct Bounds {
    /// Longest left-hand side completion may create.
    pub depth_bound: usize,
    pub max_rules: usize,
    /// Rewrite steps allowed per normalization.
    pub max_steps: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            depth_bound: 12,
            max_rules: 4096,
            max_steps: 1_000_000,
        }
    }
}

impl RewriteSystem {
    fn from_rules(mut rules: Vec<(Word, Word)>) -> Self {
        rules.sort_by(|a, b| shortlex(&a.0, &b.0).then_with(|| shortlex(&a.1, &b.1)));
        let mut by_last: HashMap<usize, Vec<usize>> = HashMap::new();
        for (k, (l, _)) in rules.iter().enumerate() {
            by_last
                .entry(*l.last().expect("rules have nonempty sides"))
                .or_default()
                .push(k);
        }
        RewriteSystem { rules, by_last }
    }

    pub fn rules(&self) -> &[(Word, Word)] {
        &self.rules
    }

    /// A rule whose left side is a suffix of `w`.
    fn suffix_redex(&self, w: &[usize]) -> Option<usize> {
        let last = w.last()?;
        self.by_last
            .get(last)?
            .iter()
            .copied()
            .find(|&k| w.ends_with(&self.rules[k].0))
    }

    /// Whether `w` is irreducible, given that `w` minus its last letter is.
    pub fn extends_irreducibly(&self, w: &[usize]) -> bool {
        self.suffix_redex(w).is_none()
    }

    pub fn is_normal(&self, w: &[usize]) -> bool {
        (1..=w.len()).all(|n| self.suffix_redex(&w[..n]).is_none())
    }

    pub fn normalize(&self, word: &[usize], max_steps: usize) -> Result<Word> {
        let mut out: Word = Vec::with_capacity(word.len());
        let mut input: Vec<usize> = word.iter().rev().copied().collect();
        let mut steps = 0usize;
        while let Some(g) = input.pop() {
            out.push(g);
            if let Some(k) = self.suffix_redex(&out) {
                steps += 1;
                if steps > max_steps {
                    return Err(Error::DepthExceeded(format!(
                        "normalization took more than {max_steps} steps"
                    )));
                }
                let (l, r) = &self.rules[k];
                out.truncate(out.len() - l.len());
                input.extend(r.iter().rev());
            }
        }
        Ok(out)
    }

    /// Completes a set of equations. Fails with `DepthExceeded` when a rule
    /// longer than the depth bound, or too many rules, would be needed.
    pub fn complete(equations: Vec<(Word, Word)>, bounds: Bounds) -> Result<RewriteSystem> {
        let mut sys = RewriteSystem::default();
        let mut queue: VecDeque<(Word, Word)> = equations.into();
        loop {
            while let Some((a, b)) = queue.pop_front() {
                let a = sys.normalize(&a, bounds.max_steps)?;
                let b = sys.normalize(&b, bounds.max_steps)?;
                let (l, r) = match shortlex(&a, &b) {
                    Ordering::Equal => continue,
                    Ordering::Greater => (a, b),
                    Ordering::Less => (b, a),
                };
                if l.len() > bounds.depth_bound {
                    return Err(Error::DepthExceeded(format!(
                        "completion needs a rule of length {} (bound {})",
                        l.len(),
                        bounds.depth_bound
                    )));
                }
                let mut kept = Vec::with_capacity(sys.rules.len() + 1);
                for (ol, or) in sys.rules.drain(..) {
                    if contains(&ol, &l) {
                        queue.push_back((ol, or));
                    } else {
                        kept.push((ol, or));
                    }
                }
                for (ol, or) in &kept {
                    critical_pairs(ol, or, &l, &r, &mut queue);
                    critical_pairs(&l, &r, ol, or, &mut queue);
                }
                critical_pairs(&l, &r, &l, &r, &mut queue);
                kept.push((l, r));
                sys = RewriteSystem::from_rules(kept);
                let reduced = sys
                    .rules
                    .iter()
                    .map(|(l, r)| Ok((l.clone(), sys.normalize(r, bounds.max_steps)?)))
                    .collect::<Result<Vec<_>>>()?;
                sys = RewriteSystem::from_rules(reduced);
                if sys.rules.len() > bounds.max_rules {
                    return Err(Error::DepthExceeded(format!(
                        "completion exceeded {} rules",
                        bounds.max_rules
                    )));
                }
            }
            // Final confluence pass over every critical pair.
            for (l1, r1) in &sys.rules {
                for (l2, r2) in &sys.rules {
                    critical_pairs(l1, r1, l2, r2, &mut queue);
                }
            }
            let mut open = VecDeque::new();
            for (a, b) in queue.drain(..) {
                if sys.normalize(&a, bounds.max_steps)? != sys.normalize(&b, bounds.max_steps)? {
                    open.push_back((a, b));
                }
            }
            if open.is_empty() {
                return Ok(sys);
            }
            queue = open;
        }
    }
}

fn contains(hay: &[usize], needle: &[usize]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

/// Critical pairs of `l1 -> r1` against `l2 -> r2`: proper overlaps of a
/// suffix of `l1` with a prefix of `l2`, and occurrences of `l2` in `l1`.
fn critical_pairs(l1: &[usize], r1: &[usize], l2: &[usize], r2: &[usize], out: &mut VecDeque<(Word, Word)>) {
    for k in 1..l1.len().min(l2.len() + 1) {
        if k < l2.len() && l1[l1.len() - k..] == l2[..k] {
            let x = &l1[..l1.len() - k];
            let z = &l2[k..];
            out.push_back(([r1, z].concat(), [x, r2].concat()));
        }
    }
    if l2.len() < l1.len() {
        for s in 0..=l1.len() - l2.len() {
            if l1[s..s + l2.len()] == *l2 {
                out.push_back((r1.to_vec(), [&l1[..s], r2, &l1[s + l2.len()..]].concat()));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sys(eqs: &[(&[usize], &[usize])]) -> RewriteSystem {
        let eqs = eqs.iter().map(|(a, b)| (a.to_vec(), b.to_vec())).collect();
        RewriteSystem::complete(eqs, Bounds::default()).unwrap()
    }

    #[test]
    fn inverse_pair_cancels() {
        let s = sys(&[(&[0, 1], &[]), (&[1, 0], &[])]);
        assert_eq!(s.normalize(&[0, 1, 0, 1, 0], 100).unwrap(), vec![0]);
        assert_eq!(s.normalize(&[1, 0], 100).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn free_words_are_untouched() {
        let s = sys(&[]);
        assert_eq!(s.normalize(&[0, 1, 0], 100).unwrap(), vec![0, 1, 0]);
    }

    #[test]
    fn completion_adds_consequences() {
        // aa = b, ab = ba-style monoid: rules must become confluent.
        let s = sys(&[(&[0, 0, 0], &[]), (&[1, 1], &[]), (&[0, 1], &[1, 0, 0])]);
        for w in [vec![0, 1, 0], vec![1, 0, 1], vec![0, 0, 1, 1, 0]] {
            let n = s.normalize(&w, 1000).unwrap();
            assert_eq!(s.normalize(&n, 1000).unwrap(), n);
        }
    }

    #[test]
    fn depth_bound_is_enforced() {
        let eqs = vec![(vec![0; 5], vec![])];
        let b = Bounds {
            depth_bound: 3,
            ..Bounds::default()
        };
        assert!(matches!(RewriteSystem::complete(eqs, b), Err(Error::DepthExceeded(_))));
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent_and_compatible(
            v in proptest::collection::vec(0usize..2, 0..10),
            w in proptest::collection::vec(0usize..2, 0..10),
        ) {
            let s = sys(&[(&[0, 1], &[]), (&[1, 0], &[])]);
            let nv = s.normalize(&v, 1000).unwrap();
            let nw = s.normalize(&w, 1000).unwrap();
            prop_assert_eq!(s.normalize(&nv, 1000).unwrap(), nv.clone());
            let joined = s.normalize(&[v.clone(), w.clone()].concat(), 1000).unwrap();
            prop_assert_eq!(joined, s.normalize(&[nv, nw].concat(), 1000).unwrap());
        }
    }
}
