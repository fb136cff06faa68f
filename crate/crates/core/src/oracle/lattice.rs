//! Canonical labels for right cosets `g C_d`.
//!
//! `C_d` is the common stabilizer of the lattices
//! `L1 = <e1, p^d1 e2, p^d3 e3>` and `L2 = <e1, e2, p^d2 e3>`, so `g C_d` is
//! determined by the pair `(g L1, g L2)`. Each image lattice contains
//! `p^n Z^3` and is labelled by its Hermite normal form.

use super::ring::{ResidueMat, ResidueRing};
use crate::poset::Triple;

/// Upper triangular entries of two Hermite normal forms.
pub type CosetLabel = [u32; 12];

/// Row-style Hermite normal form of `<gens> + p^n Z^3`: upper triangular,
/// pivots are powers of `p`, entries above a pivot are reduced into
/// `[0, pivot)`.
pub fn hnf(gens: &[[i64; 3]], modulus: i64) -> [[i64; 3]; 3] {
    let mut b = [[modulus, 0, 0], [0, modulus, 0], [0, 0, modulus]];
    for g in gens {
        let mut v = g.map(|x| x.rem_euclid(modulus));
        for i in 0..3 {
            if v[i] == 0 {
                continue;
            }
            let (g, s, t) = ext_gcd(b[i][i], v[i]);
            let (bi, vi) = (b[i][i] / g, v[i] / g);
            let row = b[i];
            for j in i..3 {
                let new_row = s * row[j] + t * v[j];
                let new_v = bi * v[j] - vi * row[j];
                b[i][j] = new_row.rem_euclid(modulus);
                v[j] = new_v.rem_euclid(modulus);
            }
            // the pivot divides the modulus, so reducing it mod p^n only
            // loses it when it equals p^n itself
            if b[i][i] == 0 {
                b[i][i] = modulus;
            }
        }
    }
    for j in 1..3 {
        for i in 0..j {
            let f = b[i][j].div_euclid(b[j][j]);
            if f != 0 {
                for k in j..3 {
                    b[i][k] -= f * b[j][k];
                }
            }
            for k in j + 1..3 {
                b[i][k] = b[i][k].rem_euclid(modulus);
            }
        }
    }
    b
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1, 0);
    let (mut old_t, mut t) = (0, 1);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Label of `g C_d`.
pub fn coset_label(ring: &ResidueRing, g: &ResidueMat, d: Triple) -> CosetLabel {
    let modulus = ring.modulus() as i64;
    let col = |j: usize, e: u32| -> [i64; 3] {
        let s = ring.pi_pow(e);
        [0, 1, 2].map(|i| ring.mul(g.0[i][j], s) as i64)
    };
    let l1 = hnf(&[col(0, 0), col(1, d.c1()), col(2, d.c3())], modulus);
    let l2 = hnf(&[col(0, 0), col(1, 0), col(2, d.c2())], modulus);
    let mut out = [0u32; 12];
    let mut k = 0;
    for b in [l1, l2] {
        for i in 0..3 {
            for &entry in &b[i][i..] {
                out[k] = entry as u32;
                k += 1;
            }
        }
    }
    out
}
