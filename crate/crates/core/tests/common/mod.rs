#![allow(dead_code)]

use binmat::{constructions, BinaryMatroid, Gf2Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Each nonzero vector of GF(2)^r kept with probability `density`.
pub fn random_matroid(rng: &mut ChaCha8Rng, r: usize, density: f64) -> BinaryMatroid {
    let pts: Vec<u64> = (1u64..1 << r).filter(|_| rng.gen_bool(density)).collect();
    BinaryMatroid::from_bits(r, pts).unwrap()
}

/// A random matroid of rank `1..=max_r` with random density.
pub fn random_any(rng: &mut ChaCha8Rng, max_r: usize) -> BinaryMatroid {
    let r = rng.gen_range(1..=max_r);
    let density = rng.gen_range(0.05..0.95);
    random_matroid(rng, r, density)
}

/// A random full-rank matroid of rank `1..=max_r`, by rejection.
pub fn random_full_rank(rng: &mut ChaCha8Rng, max_r: usize) -> BinaryMatroid {
    let r = rng.gen_range(1..=max_r);
    loop {
        let density = rng.gen_range(0.0..0.9);
        let m = random_matroid(rng, r, density);
        if m.is_full_rank() {
            return m;
        }
    }
}

/// Image of `m` under a random invertible linear map.
pub fn random_image(rng: &mut ChaCha8Rng, m: &BinaryMatroid) -> BinaryMatroid {
    let r = m.ambient_rank();
    let cols: Vec<u64> = loop {
        let cols: Vec<u64> = (0..r).map(|_| rng.gen_range(0..1u64 << r)).collect();
        let vs: Vec<Gf2Vector> = cols.iter().map(|&c| Gf2Vector::new(c)).collect();
        if binmat::rank_of(&vs, r).unwrap() == r {
            break cols;
        }
    };
    let apply = |x: u64| (0..r).filter(|i| x >> i & 1 == 1).fold(0, |acc, i| acc ^ cols[i]);
    BinaryMatroid::from_bits(r, m.iter().map(|v| apply(v.bits()))).unwrap()
}

/// Every family member with ambient rank at most `max_r`.
pub fn families(max_r: usize) -> Vec<(String, BinaryMatroid)> {
    let mut out = Vec::new();
    let mut push = |name: String, m: binmat::Result<BinaryMatroid>| out.push((name, m.unwrap()));
    for r in 1..=max_r {
        push(format!("pg({r})"), constructions::pg(r));
        push(format!("ag({r})"), constructions::ag(r));
        for c in 1..=r {
            push(format!("bb({r},{c})"), constructions::bose_burton(r, c));
        }
    }
    for k in (3..=max_r + 1).step_by(2) {
        push(format!("circuit({k})"), constructions::circuit(k));
    }
    for k in (5..=max_r + 1).step_by(2) {
        for r in k - 1..=max_r {
            push(format!("extremal_odd_girth({k},{r})"), constructions::extremal_odd_girth(k, r));
        }
    }
    for n in 2..=max_r.saturating_sub(2) {
        for r in n + 2..=max_r {
            push(format!("extremal_gs({n},{r})"), constructions::extremal_gs(n, r));
        }
    }
    out
}
