//! Braid classes and braid graphs in simply-laced Coxeter systems.
//!
//! The crate models simply-laced Coxeter graphs, words over their
//! generators, and the equivalence classes of reduced expressions generated
//! by braid moves (`sts -> tst`). On top of the enumeration kernel it
//! provides:
//!
//! - braid shadows, local supports, rank, braid distance, Matsumoto graphs,
//!   and commutation classes ([`braid`], [`word`]);
//! - link detection and the unique factorization of a reduced word into
//!   maximal links, with box-product verification of the braid graph,
//!   Fibonacci-link recognition, and the explicit type-A strings ([`link`]);
//! - binary labelings that embed braid graphs isometrically into hypercubes,
//!   Fibonacci cubes, Djokovic-Winkler edge classes, isometric dimension,
//!   and a median-graph test ([`embed`]);
//! - independent brute-force oracles used by the test suite ([`oracle`]).
//!
//! All arithmetic is exact: reducedness is decided with the integer
//! geometric representation, so the infinite affine types (`A~`, `D~`) work
//! the same way as the finite ones. Positions in words are 1-based across
//! the public API, and every enumeration is deterministic (members are
//! reported in lexicographic order).

#![forbid(unsafe_code)]

pub mod braid;
pub mod embed;
pub mod error;
pub mod graph;
pub mod link;
pub mod oracle;
pub mod word;

pub use braid::{
    commutation_class, enumerate_braid_class, enumerate_matsumoto, BraidClass, BraidEdge,
    MatsumotoGraph, MoveKind, DEFAULT_CAP,
};
pub use embed::{
    automorphism_shift, braid_graph, embed_word, fibonacci_cube, hypercube, image_is_fibonacci,
    is_median_graph, isometric_dimension, phi, theta_classes, verify_isometric, BitLabel,
    IsometryReport, Labeling, SimpleGraph,
};
pub use error::{Error, Result};
pub use graph::{CoxeterGraph, Family, Generator};
pub use link::{
    choose_sigma, fibonacci_form, is_fibonacci_link, is_link, link_factorization, partition_xy,
    star_criterion, type_a_string, type_a_string_in_rank, verify_box_product, BoxProductReport,
    Epsilon, LinkFactor, LinkFactorization, StringSpec,
};
pub use oracle::{all_pairs_distances, brute_min_length, small_iso, IsoWitness};
pub use word::{
    apply_braid_move, apply_commutation_move, braid_shadows, extension_is_reduced,
    group_element_fingerprint, is_reduced, local_support, reflect, simple_root, Fingerprint,
    Interval, RootCoordinates, Word,
};
