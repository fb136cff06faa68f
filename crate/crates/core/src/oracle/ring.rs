//! `Z/p^n` and 3x3 matrices over it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::Triple;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueRing {
    p: u64,
    n: u32,
    modulus: u64,
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl ResidueRing {
    /// `Z/p^n` for an odd prime `p >= 5`. The modulus is capped so that
    /// products of two residues fit comfortably in `u64`.
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if !is_prime(p) || p < 5 {
            return Err(Error::InvalidRing(format!("p = {p} must be a prime >= 5")));
        }
        if n == 0 {
            return Err(Error::InvalidRing("level n must be at least 1".into()));
        }
        let modulus = p
            .checked_pow(n)
            .filter(|m| *m < (1 << 31))
            .ok_or_else(|| Error::InvalidRing(format!("p^n = {p}^{n} is too large")))?;
        Ok(ResidueRing { p, n, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn level(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn reduce(&self, x: i64) -> u64 {
        x.rem_euclid(self.modulus as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.modulus
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.modulus - b) % self.modulus
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.modulus
    }

    /// `pi^e` with `pi = p`; zero once `e >= n`.
    pub fn pi_pow(&self, e: u32) -> u64 {
        if e >= self.n {
            0
        } else {
            self.p.pow(e)
        }
    }

    /// Valuation of a residue, with `val(0) = n`.
    pub fn val(&self, x: u64) -> u32 {
        let mut x = x % self.modulus;
        if x == 0 {
            return self.n;
        }
        let mut v = 0;
        while x % self.p == 0 {
            x /= self.p;
            v += 1;
        }
        v
    }

    pub fn is_unit(&self, x: u64) -> bool {
        x % self.p != 0
    }

    pub fn inv(&self, x: u64) -> Option<u64> {
        if !self.is_unit(x) {
            return None;
        }
        let (mut old_r, mut r) = (x as i64, self.modulus as i64);
        let (mut old_s, mut s) = (1i64, 0i64);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        Some(self.reduce(old_s))
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.modulus;
        base %= self.modulus;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Order of the unit group, `p^(n-1) (p - 1)`.
    pub fn unit_order(&self) -> u64 {
        self.modulus / self.p * (self.p - 1)
    }

    /// Smallest generator of the cyclic group `(Z/p^n)^x`.
    pub fn primitive_root(&self) -> u64 {
        let order = self.unit_order();
        let mut primes = Vec::new();
        let mut m = order;
        let mut f = 2;
        while f * f <= m {
            if m % f == 0 {
                primes.push(f);
                while m % f == 0 {
                    m /= f;
                }
            }
            f += 1;
        }
        if m > 1 {
            primes.push(m);
        }
        (2..self.modulus)
            .find(|&g| self.is_unit(g) && primes.iter().all(|&r| self.pow(g, order / r) != 1))
            .expect("unit group of Z/p^n is cyclic for odd p")
    }

    pub fn identity(&self) -> ResidueMat {
        self.diag(1, 1, 1)
    }

    pub fn diag(&self, a: u64, b: u64, c: u64) -> ResidueMat {
        ResidueMat([[a, 0, 0], [0, b, 0], [0, 0, c]])
    }

    /// `1 + r E_ij`.
    pub fn elementary(&self, i: usize, j: usize, r: u64) -> ResidueMat {
        let mut m = self.identity();
        m.0[i][j] = self.add(m.0[i][j], r % self.modulus);
        m
    }

    pub fn mat(&self, rows: [[i64; 3]; 3]) -> ResidueMat {
        ResidueMat(rows.map(|row| row.map(|x| self.reduce(x))))
    }

    pub fn mat_mul(&self, a: &ResidueMat, b: &ResidueMat) -> ResidueMat {
        let mut out = [[0u64; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let s: u64 = (0..3).map(|k| a.0[i][k] * b.0[k][j]).sum();
                *cell = s % self.modulus;
            }
        }
        ResidueMat(out)
    }

    pub fn det(&self, a: &ResidueMat) -> u64 {
        let m = &a.0;
        let t = |x: u64, y: u64, z: u64| self.mul(self.mul(x, y), z);
        let plus = self.add(
            self.add(t(m[0][0], m[1][1], m[2][2]), t(m[0][1], m[1][2], m[2][0])),
            t(m[0][2], m[1][0], m[2][1]),
        );
        let minus = self.add(
            self.add(t(m[0][2], m[1][1], m[2][0]), t(m[0][0], m[1][2], m[2][1])),
            t(m[0][1], m[1][0], m[2][2]),
        );
        self.sub(plus, minus)
    }

    pub fn is_invertible(&self, a: &ResidueMat) -> bool {
        self.is_unit(self.det(a))
    }

    pub fn mat_inv(&self, a: &ResidueMat) -> Option<ResidueMat> {
        let d_inv = self.inv(self.det(a))?;
        let m = &a.0;
        let mut out = [[0u64; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                // adj[i][j] = cofactor of (j, i)
                let (r0, r1) = match j {
                    0 => (1, 2),
                    1 => (0, 2),
                    _ => (0, 1),
                };
                let (c0, c1) = match i {
                    0 => (1, 2),
                    1 => (0, 2),
                    _ => (0, 1),
                };
                let minor = self.sub(self.mul(m[r0][c0], m[r1][c1]), self.mul(m[r0][c1], m[r1][c0]));
                let cof = if (i + j) % 2 == 0 { minor } else { self.sub(0, minor) };
                *cell = self.mul(cof, d_inv);
            }
        }
        Some(ResidueMat(out))
    }

    /// Membership in the image of `C_c` modulo `p^n`: invertible, with
    /// `val(g21) >= c1`, `val(g32) >= c2`, `val(g31) >= c3`.
    pub fn in_c(&self, g: &ResidueMat, c: Triple) -> bool {
        self.val(g.0[1][0]) >= c.c1()
            && self.val(g.0[2][1]) >= c.c2()
            && self.val(g.0[2][0]) >= c.c3()
            && self.is_invertible(g)
    }

    /// Generators of `GL(3, Z/p^n)`: the six elementary transvections and
    /// `diag(g, 1, 1)` for a primitive root `g`.
    pub fn k_generators(&self) -> Vec<ResidueMat> {
        let mut gens = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    gens.push(self.elementary(i, j, 1));
                }
            }
        }
        gens.push(self.diag(self.primitive_root(), 1, 1));
        gens
    }

    /// Generators of the image of `C_c`: upper transvections, lower
    /// transvections scaled by `p^c1`, `p^c2`, `p^c3`, and the diagonal torus.
    pub fn c_generators(&self, c: Triple) -> Vec<ResidueMat> {
        let g = self.primitive_root();
        let mut gens = vec![
            self.elementary(0, 1, 1),
            self.elementary(0, 2, 1),
            self.elementary(1, 2, 1),
        ];
        for (i, j, e) in [(1, 0, c.c1()), (2, 1, c.c2()), (2, 0, c.c3())] {
            let r = self.pi_pow(e);
            if r != 0 {
                gens.push(self.elementary(i, j, r));
            }
        }
        gens.push(self.diag(g, 1, 1));
        gens.push(self.diag(1, g, 1));
        gens.push(self.diag(1, 1, g));
        gens
    }

    /// `|GL(3, Z/p^n)|`.
    pub fn group_order(&self) -> u128 {
        let p = u128::from(self.p);
        let q3 = p * p * p;
        let base = (q3 - 1) * (q3 - p) * (q3 - p * p);
        base * p.pow(9 * (self.n - 1))
    }
}

/// A 3x3 matrix of residues, row major.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ResidueMat(pub [[u64; 3]; 3]);

impl ResidueMat {
    pub fn entry(&self, i: usize, j: usize) -> u64 {
        self.0[i][j]
    }
}
