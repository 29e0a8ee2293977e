//! Seeded random generation of cones and vectors.
//!
//! Every randomized driver derives an independent stream per task index from
//! the user seed, so parallel runs are reproducible.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cone::{AlComponent, PolyCone};
use crate::rational::{int_vec, is_zero_vec, IntVec};

pub type Stream = ChaCha8Rng;

pub fn substream(seed: u64, task: u64) -> Stream {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(task);
    rng
}

pub fn nonzero_vec<R: Rng>(rng: &mut R, dim: usize, bound: i64) -> IntVec {
    loop {
        let v: Vec<i64> = (0..dim).map(|_| rng.gen_range(-bound..=bound)).collect();
        let v = int_vec(&v);
        if !is_zero_vec(&v) {
            return v;
        }
    }
}

/// Random cone from generators (mostly) or halfspaces, occasionally trivial.
pub fn random_cone<R: Rng>(rng: &mut R, dim: usize) -> PolyCone {
    let roll: u32 = rng.gen_range(0..100);
    match roll {
        0..=2 => PolyCone::zero(dim),
        3..=5 => PolyCone::full(dim),
        6..=69 => {
            let k = rng.gen_range(1..=dim + 2);
            let gens: Vec<IntVec> = (0..k).map(|_| nonzero_vec(rng, dim, 3)).collect();
            PolyCone::from_generators(dim, &gens)
        }
        _ => {
            let k = rng.gen_range(1..=dim + 1);
            let normals: Vec<IntVec> = (0..k).map(|_| nonzero_vec(rng, dim, 3)).collect();
            PolyCone::from_halfspaces(dim, &normals)
        }
    }
}

/// Random pointed cone generated by `dim` to `dim + 2` vectors.
pub fn random_generated_cone<R: Rng>(rng: &mut R, dim: usize) -> PolyCone {
    let k = rng.gen_range(1..=dim + 2);
    let gens: Vec<IntVec> = (0..k).map(|_| nonzero_vec(rng, dim, 3)).collect();
    PolyCone::from_generators(dim, &gens)
}

pub fn random_al_signature<R: Rng>(rng: &mut R, dim: usize) -> Vec<AlComponent> {
    const ALL: [AlComponent; 4] = [
        AlComponent::Line,
        AlComponent::Pos,
        AlComponent::Neg,
        AlComponent::Zero,
    ];
    (0..dim).map(|_| *ALL.choose(rng).unwrap()).collect()
}

/// Conic hull of a nonempty random subset of the given directions (possibly all).
pub fn random_subcone<R: Rng>(rng: &mut R, dim: usize, gens: &[IntVec]) -> PolyCone {
    let chosen: Vec<IntVec> = gens.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
    PolyCone::from_generators(dim, &chosen)
}
