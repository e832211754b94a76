//! Seeded generator of small random arrangements for property tests and benchmarks.

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::geom::{normalize_int_triple, ProjLine, Triple};
use crate::incidence::ProjArrangement;

/// Coefficient range for freely sampled lines.
pub const COEFF_RANGE: i64 = 9;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RandomSpec {
    /// Total number of lines.
    pub lines: usize,
    /// Sizes of groups of lines forced through a common random point.
    pub pencils: Vec<usize>,
    /// Number of random points whose pairwise joining lines are added first.
    pub join_points: usize,
}

fn random_triple(rng: &mut ChaCha8Rng) -> [i64; 3] {
    loop {
        let t = [0; 3].map(|_| rng.gen_range(-COEFF_RANGE..=COEFF_RANGE));
        if t != [0, 0, 0] {
            return t;
        }
    }
}

fn line_through(rng: &mut ChaCha8Rng, p: [i64; 3]) -> Option<Triple> {
    let v = random_triple(rng);
    let c = [
        v[1] * p[2] - v[2] * p[1],
        v[2] * p[0] - v[0] * p[2],
        v[0] * p[1] - v[1] * p[0],
    ];
    normalize_int_triple(c.map(BigInt::from)).ok()
}

/// Random arrangement of `spec.lines` distinct lines labelled `H1..Hn`.
///
/// Pencil lines come first; groups whose size exceeds the remaining line
/// budget are truncated.
pub fn random_arrangement(seed: u64, spec: &RandomSpec) -> ProjArrangement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coeffs: Vec<Triple> = Vec::with_capacity(spec.lines);
    let push = |t: Triple, coeffs: &mut Vec<Triple>| {
        if !coeffs.contains(&t) {
            coeffs.push(t);
        }
    };
    if spec.join_points >= 2 {
        let pts: Vec<[i64; 3]> = (0..spec.join_points)
            .map(|_| [0; 3].map(|_| rng.gen_range(-3..=3i64)))
            .collect();
        let mut joins: Vec<Triple> = Vec::new();
        for (a, p) in pts.iter().enumerate() {
            for q in &pts[a + 1..] {
                let c = [
                    p[1] * q[2] - p[2] * q[1],
                    p[2] * q[0] - p[0] * q[2],
                    p[0] * q[1] - p[1] * q[0],
                ];
                if let Ok(t) = normalize_int_triple(c.map(BigInt::from)) {
                    joins.push(t);
                }
            }
        }
        // random subset, in random order
        while !joins.is_empty() && coeffs.len() < spec.lines {
            let t = joins.swap_remove(rng.gen_range(0..joins.len()));
            push(t, &mut coeffs);
        }
    }
    for &size in &spec.pencils {
        let center = random_triple(&mut rng);
        let target = (coeffs.len() + size).min(spec.lines);
        let mut attempts = 0;
        while coeffs.len() < target && attempts < 1000 {
            attempts += 1;
            if let Some(t) = line_through(&mut rng, center) {
                push(t, &mut coeffs);
            }
        }
    }
    while coeffs.len() < spec.lines {
        let t = random_triple(&mut rng).map(BigInt::from);
        push(normalize_int_triple(t).expect("nonzero"), &mut coeffs);
    }
    let lines = coeffs
        .into_iter()
        .enumerate()
        .map(|(i, [a, b, c])| {
            ProjLine::from_ints(
                i64::try_from(a).expect("small"),
                i64::try_from(b).expect("small"),
                i64::try_from(c).expect("small"),
                format!("H{}", i + 1),
            )
            .expect("nonzero")
        })
        .collect();
    ProjArrangement::new(lines).expect("distinct by construction")
}

/// The `index`-th arrangement of a reproducible corpus with at most `max_lines` lines.
///
/// Shapes cycle through generic, one-pencil and multi-pencil configurations.
pub fn corpus_arrangement(seed: u64, index: u64, max_lines: usize) -> ProjArrangement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let lines = rng.gen_range(3..=max_lines.max(3));
    let mut join_points = 0;
    let pencils = match index % 5 {
        0 => vec![],
        1 => vec![rng.gen_range(3..=lines)],
        3 | 4 => {
            join_points = rng.gen_range(4..=5);
            if index % 5 == 4 {
                vec![3]
            } else {
                vec![]
            }
        }
        _ => {
            let mut groups = Vec::new();
            let mut left = lines;
            while left >= 3 && groups.len() < 3 {
                let k = rng.gen_range(3..=left.min(4));
                groups.push(k);
                left -= k - 1;
            }
            groups
        }
    };
    random_arrangement(
        rng.gen(),
        &RandomSpec {
            lines,
            pencils,
            join_points,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::incidence::build_incidence;

    #[test]
    fn reproducible() {
        let spec = RandomSpec {
            lines: 7,
            pencils: vec![3, 3],
            ..Default::default()
        };
        assert_eq!(random_arrangement(5, &spec), random_arrangement(5, &spec));
        assert_eq!(random_arrangement(5, &spec).len(), 7);
    }

    #[test]
    fn pencils_are_forced() {
        for seed in 0..20 {
            let arr = random_arrangement(
                seed,
                &RandomSpec {
                    lines: 6,
                    pencils: vec![4],
                    ..Default::default()
                },
            );
            let inc = build_incidence(&arr);
            assert!(inc.points().iter().any(|p| p.multiplicity() >= 4));
        }
    }
}
