use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("malformed quiver description: {0}")]
    Parse(String),
    #[error("bad identifier {0:?}: ids must be non-empty and free of whitespace, '(', ')' and '|'")]
    BadId(String),
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("duplicate arrow {0:?}")]
    DuplicateArrow(String),
    #[error("arrow {arrow:?} refers to unknown vertex {vertex:?}")]
    UnknownVertex { arrow: String, vertex: String },
    #[error("relation refers to unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("duplicate relation ({0:?}, {1:?})")]
    DuplicateRelation(String, String),
    #[error("vertex {vertex:?} has {incoming} incoming and {outgoing} outgoing arrows (at most 2 each)")]
    DegreeViolation {
        vertex: String,
        incoming: usize,
        outgoing: usize,
    },
    #[error("relation ({first:?}, {second:?}) pairs arrows that do not compose")]
    NonComposableRelation { first: String, second: String },
    #[error("arrow {arrow:?}: {detail}")]
    GentleBranchViolation { arrow: String, detail: String },
    #[error("vertex {vertex:?} has degree {degree}, expected 1 or 4")]
    NotComplete { vertex: String, degree: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("cannot parse walk: {0}")]
    Parse(String),
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("letters {0} and {1} do not concatenate")]
    NotComposable(String, String),
    #[error("factor {0} {1} is not reduced")]
    NotReduced(String, String),
    #[error("factor {0} {1} lies in the ideal")]
    RelationHit(String, String),
    #[error("walk is not maximal: the {0} end can be extended")]
    NotMaximal(&'static str),
    #[error("tail {0} is not an oriented relation-free cycle")]
    BadTail(String),
    #[error("empty walk")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("walk {0} is not bending")]
    NotBending(String),
    #[error("walk {0} is not a member of the facet")]
    NotMember(String),
    #[error("facet is not maximal: {0}")]
    NotMaximalFacet(String),
    #[error("the two marked walks coincide")]
    SameMarkedWalk,
    #[error("marked walks kiss, the countercurrent order is undefined")]
    KissingPair,
    #[error("walk universe is incomplete (raise the body bound, or the set is infinite)")]
    IncompleteUniverse,
    #[error("flip construction failed: {0}")]
    FlipFailed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("flip graph is not closed")]
    NotClosed,
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("infinite kissing number for walk {0}")]
    InfiniteKissing(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("dissection is not cellular: {0}")]
    NotCellular(String),
    #[error("dissections are not dual: {0}")]
    NotDual(String),
    #[error("face {0} contains no dual point")]
    MissingDualPoint(usize),
    #[error("face {0} contains {1} dual points")]
    MultipleDualPoints(usize, usize),
    #[error("euler characteristic mismatch: {0}")]
    InconsistentEuler(String),
    #[error("crossing sequence is not reduced at step {0}")]
    NotReducedCrossing(usize),
    #[error("crossing sequence breaks at step {0}")]
    BrokenCurve(usize),
    #[error("curves live on different surfaces")]
    DifferentSurface,
    #[error("surface carries no arrow labels")]
    Unlabelled,
    #[error(transparent)]
    Walk(#[from] WalkError),
}
