/// Coobjects `c0`, coarrows `c1`, cocomposable coarrows `c2` and the six
/// structure maps. Nothing here is assumed to satisfy the axioms; see
/// [`crate::cocat::check_cocategory`].
#[derive(Debug, Clone)]
pub struct Cocategory<O, M> {
    pub c0: O,
    pub c1: O,
    pub c2: O,
    /// c0 -> c1, the "domain" end.
    pub bot: M,
    /// c0 -> c1, the "codomain" end.
    pub top: M,
    /// c1 -> c0
    pub i: M,
    /// c1 -> c2, first segment.
    pub down: M,
    /// c1 -> c2, second segment.
    pub up: M,
    /// c1 -> c2, cocomposition.
    pub star: M,
}

/// A cocategory whose object of coobjects is the tensor unit, with the
/// optional coinverse and lattice operations.
#[derive(Debug, Clone)]
pub struct Interval<O, M> {
    pub name: String,
    pub cocat: Cocategory<O, M>,
    pub sigma: Option<M>,
    pub meet: Option<M>,
    pub join: Option<M>,
}

impl<O, M> Interval<O, M> {
    pub fn new(name: impl Into<String>, cocat: Cocategory<O, M>) -> Self {
        Interval {
            name: name.into(),
            cocat,
            sigma: None,
            meet: None,
            join: None,
        }
    }

    pub fn with_sigma(mut self, sigma: M) -> Self {
        self.sigma = Some(sigma);
        self
    }

    pub fn with_lattice(mut self, meet: M, join: M) -> Self {
        self.meet = Some(meet);
        self.join = Some(join);
        self
    }

    /// The object of coarrows.
    pub fn obj(&self) -> &O {
        &self.cocat.c1
    }
}

/// A 2-cell `eta: src => tgt` between maps `A -> B`, given by
/// `cell: A * I -> B`.
#[derive(Debug, Clone)]
pub struct Homotopy<M> {
    pub src: M,
    pub tgt: M,
    pub cell: M,
}

/// Boundary of a square `B * (I * I) -> A`, in the order
/// left-bot, left-top, right-bot, right-top.
#[derive(Debug, Clone)]
pub struct Boundary<M> {
    pub left_bot: M,
    pub left_top: M,
    pub right_bot: M,
    pub right_top: M,
}

impl<M> Boundary<M> {
    pub fn components(&self) -> [&M; 4] {
        [&self.left_bot, &self.left_top, &self.right_bot, &self.right_top]
    }
}

pub const BOUNDARY_NAMES: [&str; 4] = ["left-bot", "left-top", "right-bot", "right-top"];
