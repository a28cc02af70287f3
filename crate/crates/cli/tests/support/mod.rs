//! Deterministic random construction of valid split algebras for the
//! acceptance suite: direct sums of known simple or central blocks over a
//! shared Z2 grading, optionally twisted by a random block-diagonal
//! automorphism.

use homlie_core::algebra::ColorAlgebra;
use homlie_core::catalog;
use homlie_core::grading::{Bicharacter, GradingGroup};
use homlie_core::linalg::{frac, scalar, Matrix, Scalar};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug)]
enum Block {
    Sl2,
    Osp12,
    Gl11,
    EvenLine,
    OddLine,
}

impl Block {
    fn dim(self) -> usize {
        match self {
            Block::Sl2 => 3,
            Block::Osp12 => 5,
            Block::Gl11 => 4,
            Block::EvenLine | Block::OddLine => 1,
        }
    }

    fn build(self, group: &GradingGroup, epsilon: &Bicharacter) -> ColorAlgebra {
        match self {
            Block::Sl2 => catalog::sl2_in(group.clone(), epsilon.clone()),
            Block::Osp12 => catalog::osp12(),
            Block::Gl11 => catalog::super_z2_toy(),
            Block::EvenLine => ColorAlgebra::abelian(
                group.clone(),
                epsilon.clone(),
                vec![group.element(&[0]).unwrap()],
            ),
            Block::OddLine => ColorAlgebra::abelian(
                group.clone(),
                epsilon.clone(),
                vec![group.element(&[1]).unwrap()],
            ),
        }
    }

    /// Diagonal automorphism entries for the block with parameter `t`.
    fn twist_entries(self, t: &Scalar) -> Vec<Scalar> {
        let one = scalar(1);
        match self {
            Block::Sl2 => vec![one, t.clone(), t.recip()],
            Block::Osp12 => {
                let t2 = t * t;
                vec![scalar(1), t2.clone(), t2.recip(), t.clone(), t.recip()]
            }
            Block::Gl11 => vec![scalar(1), scalar(1), t.clone(), t.recip()],
            Block::EvenLine | Block::OddLine => vec![t.clone()],
        }
    }
}

const BLOCKS: &[Block] = &[
    Block::Sl2,
    Block::Osp12,
    Block::Gl11,
    Block::EvenLine,
    Block::OddLine,
];

fn twist_parameters() -> Vec<Scalar> {
    vec![
        scalar(2),
        scalar(3),
        scalar(5),
        scalar(-2),
        frac(1, 2),
        frac(1, 3),
        frac(3, 2),
        frac(-5, 7),
    ]
}

/// `count` valid split algebras of dimension at most `max_dim`, with a
/// fixed seed so every run sees the same corpus.
pub fn random_split_algebras(count: usize, max_dim: usize) -> Vec<(String, ColorAlgebra)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2026);
    let group = GradingGroup::new(0, vec![2]).unwrap();
    let epsilon = Bicharacter::new(vec![vec![scalar(-1)]]);
    let parameters = twist_parameters();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut blocks: Vec<Block> = Vec::new();
        let mut dim = 0;
        let target_blocks = rng.gen_range(1..=3);
        for _ in 0..target_blocks {
            let candidate = *BLOCKS.choose(&mut rng).unwrap();
            if dim + candidate.dim() <= max_dim {
                dim += candidate.dim();
                blocks.push(candidate);
            }
        }
        if blocks.is_empty() {
            continue;
        }
        let mut algebra = blocks[0].build(&group, &epsilon);
        for block in &blocks[1..] {
            algebra = algebra
                .direct_sum(&block.build(&group, &epsilon))
                .expect("blocks share the grading data");
        }
        let mut label = format!("{blocks:?}");
        if rng.gen_bool(0.7) {
            let mut entries: Vec<Scalar> = Vec::with_capacity(dim);
            let mut ts = Vec::new();
            for block in &blocks {
                let t = parameters.choose(&mut rng).unwrap();
                ts.push(t.clone());
                entries.extend(block.twist_entries(t));
            }
            let mut psi = Matrix::identity(dim);
            for (i, value) in entries.into_iter().enumerate() {
                psi.set(i, i, value);
            }
            algebra = algebra
                .yau_twist(&psi)
                .expect("blockwise rescalings are automorphisms");
            label = format!("{blocks:?} twisted by {ts:?}");
        }
        out.push((label, algebra));
    }
    out
}
