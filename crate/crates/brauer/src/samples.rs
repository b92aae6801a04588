//! The two running examples used throughout the tests and the CLI docs.

use crate::graph::{BrauerGraph, Grading};

/// Ordinary graph with a 4-valent central vertex and multiplicities 2 on
/// `1+`, `2+`, `3+`.
pub fn ex1() -> BrauerGraph {
    BrauerGraph::from_cycles(
        &["1+", "1-", "2+", "2-", "3+", "3-", "4+", "4-"],
        &[&["1+", "1-"], &["2+", "2-"], &["3+", "3-"], &["4+", "4-"]],
        &[&["1-", "4-", "3-", "2-"], &["2+", "3+"]],
        &[("1+", 2), ("2+", 2), ("3+", 2)],
    )
    .expect("ex1 is well formed")
}

/// Admissible Z/2 grading of [`ex1`]: degree 1 on `1+` and `3+`.
pub fn ex1_grading() -> Grading {
    Grading::from_named(&ex1(), 2, &[("1+", 1), ("3+", 1)]).expect("ex1 names")
}

/// Skew graph with legs `2` and `3`.
pub fn ex2() -> BrauerGraph {
    BrauerGraph::from_cycles(
        &["1+", "1-", "2", "3", "4+", "4-", "5+", "5-"],
        &[&["1+", "1-"], &["4+", "4-"], &["5+", "5-"]],
        &[&["1-", "3", "2"], &["1+", "4+", "5+"]],
        &[("4-", 3), ("3", 2), ("2", 2), ("1-", 2)],
    )
    .expect("ex2 is well formed")
}

pub fn ex2_grading() -> Grading {
    Grading::zero(ex2().len(), 2)
}
