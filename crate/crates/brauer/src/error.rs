use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown half-edge `{0}`")]
    UnknownHalfEdge(String),
    #[error("duplicate half-edge `{0}`")]
    DuplicateHalfEdge(String),
    #[error("bad half-edge name `{0}`")]
    BadName(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("malformed graph data: {0}")]
    Malformed(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid grading: {0}")]
    Grading(String),
    #[error("faces undefined for skew graphs")]
    FacesOfSkew,
    #[error("subset is not stable under the pairing: {0}")]
    NotPairingStable(String),
    #[error("({h}, {r}) is not a sector of the given subset")]
    NotASector { h: String, r: usize },
    #[error("half-edge `{0}` induces no arrow")]
    NoArrow(String),
    #[error("half-edge `{0}` is not in the moved subset")]
    NotInSubset(String),
    #[error("invalid cut: {0}")]
    BadCut(String),
    #[error("group action: {0}")]
    GroupAction(String),
    #[error("idempotents: {0}")]
    Idempotents(String),
    #[error("algebra: {0}")]
    Algebra(String),
    #[error("not tilting: {0}")]
    NotTilting(String),
}

pub type Result<T> = std::result::Result<T, Error>;
