//! Independent oracles shared by the integration tests. None of these call
//! the library's canonical forms, width search or HNF.

#![allow(dead_code)]

use std::collections::BTreeSet;

use lp3_core::equivalence::AffineUnimodularMap;
use lp3_core::geometry::{det3, gcd, IntMatrix3, LatticePoint};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn p(x: i64, y: i64, z: i64) -> LatticePoint {
    LatticePoint::new(x, y, z)
}

/// A random unimodular matrix: a signed permutation times a few elementary
/// shears with small multipliers.
pub fn random_unimodular(rng: &mut impl Rng) -> IntMatrix3 {
    let mut m = [[0i64; 3]; 3];
    let mut perm = [0usize, 1, 2];
    for i in (1..3).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    for (i, &j) in perm.iter().enumerate() {
        m[i][j] = if rng.gen_bool(0.5) { 1 } else { -1 };
    }
    for _ in 0..rng.gen_range(1..=4) {
        let (i, j) = (rng.gen_range(0..3), rng.gen_range(0..3));
        if i == j {
            continue;
        }
        let k = rng.gen_range(-2..=2);
        for c in 0..3 {
            m[i][c] += k * m[j][c];
        }
    }
    IntMatrix3(m)
}

pub fn random_map(rng: &mut impl Rng) -> AffineUnimodularMap {
    let t = p(rng.gen_range(-5..=5), rng.gen_range(-5..=5), rng.gen_range(-5..=5));
    AffineUnimodularMap::new(random_unimodular(rng), t).unwrap()
}

/// Row-style HNF from the row lattice alone: `c` is the least positive `k`
/// with `(0,0,k)` in the lattice, then `(0,b,h12)` and `(a,h01,h02)` are found
/// by scanning the reduced boxes in increasing order.
pub fn hnf_by_lattice_scan(m: &IntMatrix3) -> IntMatrix3 {
    let det = m.det().unwrap() as i64;
    let adj = m.adjugate().unwrap();
    // v = w M has integer w iff v adj(M) is divisible by det
    let member = |v: [i64; 3]| {
        (0..3).all(|j| (0..3).map(|i| v[i] * adj.0[i][j]).sum::<i64>() % det == 0)
    };
    let c = (1..).find(|&k| member([0, 0, k])).unwrap();
    let (b, h12) = (1..).find_map(|b| (0..c).find(|&t| member([0, b, t])).map(|t| (b, t))).unwrap();
    let (a, h01, h02) = (1..)
        .find_map(|a| (0..b).flat_map(|s| (0..c).map(move |t| (s, t))).find(|&(s, t)| member([a, s, t])).map(|(s, t)| (a, s, t)))
        .unwrap();
    IntMatrix3::from_rows([a, h01, h02], [0, b, h12], [0, 0, c])
}

/// Width by brute force over primitive functionals in `[-r, r]³`.
pub fn width_by_box(points: &[LatticePoint], r: i64) -> u64 {
    let mut best = u64::MAX;
    for a in -r..=r {
        for b in -r..=r {
            for c in -r..=r {
                if (a, b, c) == (0, 0, 0) || gcd(gcd(a, b), c).abs() != 1 {
                    continue;
                }
                let f = p(a, b, c);
                let vals = points.iter().map(|&q| f.dot(q));
                let (lo, hi) = vals.fold((i64::MAX, i64::MIN), |(l, h), v| (l.min(v), h.max(v)));
                best = best.min((hi - lo) as u64);
            }
        }
    }
    best
}

fn first_basis(a: &[LatticePoint]) -> Option<[usize; 4]> {
    let n = a.len();
    for i in 1..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if det3(a[i] - a[0], a[j] - a[0], a[k] - a[0]) != 0 {
                    return Some([0, i, j, k]);
                }
            }
        }
    }
    None
}

/// Every affine unimodular map sending the set `a` onto the set `b`, found by
/// sending a fixed ordered affine basis of `a` to every ordered 4-tuple of `b`.
pub fn maps_by_basis_scan(a: &[LatticePoint], b: &[LatticePoint]) -> Vec<AffineUnimodularMap> {
    if a.len() != b.len() {
        return Vec::new();
    }
    let Some(basis) = first_basis(a) else { return Vec::new() };
    let o = a[basis[0]];
    let ma = IntMatrix3::from_columns(a[basis[1]] - o, a[basis[2]] - o, a[basis[3]] - o);
    let da = ma.det().unwrap();
    let adj_a = ma.adjugate().unwrap();
    let target: BTreeSet<LatticePoint> = b.iter().copied().collect();
    let mut out = BTreeSet::new();
    let n = b.len();
    for i0 in 0..n {
        for i1 in 0..n {
            for i2 in 0..n {
                for i3 in 0..n {
                    let idx = [i0, i1, i2, i3];
                    if (0..4).any(|x| (x + 1..4).any(|y| idx[x] == idx[y])) {
                        continue;
                    }
                    let ob = b[i0];
                    let mb = IntMatrix3::from_columns(b[i1] - ob, b[i2] - ob, b[i3] - ob);
                    if mb.det().unwrap().abs() != da.abs() {
                        continue;
                    }
                    // L = Mb Ma⁻¹ = Mb adj(Ma) / det(Ma)
                    let num = mb.mul(&adj_a).unwrap();
                    if num.0.iter().flatten().any(|&v| v as i128 % da != 0) {
                        continue;
                    }
                    let l = IntMatrix3(num.0.map(|row| row.map(|v| (v as i128 / da) as i64)));
                    let lo = l.apply(o);
                    let Ok(t) = AffineUnimodularMap::new(l, ob - lo) else { continue };
                    if a.iter().all(|&q| target.contains(&t.apply(q))) {
                        out.insert(t);
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}
