//! Flat byte matrices over a small prime field.
//!
//! The exhaustive coverage checks enumerate every element of SL_n(F_p) for
//! tiny n and p and run per-element searches over unipotent cosets. Going
//! through `RingElement` there would spend nearly all the time boxing field
//! elements, so the searches run on these matrices and only the witnesses
//! found are converted to words and re-verified through the exact layer.

pub(crate) const MAX_N: usize = 4;

/// n x n matrix over F_p, row-major entries in 0..p. Used as the carrier
/// for exhaustive small-group enumerations; convert through
/// `BlockSearcher::to_matrix` to reach exact arithmetic.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GfMat {
    pub p: u8,
    pub n: usize,
    e: [u8; MAX_N * MAX_N],
}

fn inv_mod(a: u8, p: u8) -> u8 {
    debug_assert!(!a.is_multiple_of(p));
    (1..p).find(|&x| (a as u16 * x as u16) % p as u16 == 1).unwrap()
}

impl GfMat {
    pub fn identity(p: u8, n: usize) -> Self {
        assert!(n <= MAX_N && p >= 2);
        let mut m = GfMat { p, n, e: [0; MAX_N * MAX_N] };
        for i in 0..n {
            m.e[i * n + i] = 1;
        }
        m
    }

    pub fn from_entries(p: u8, n: usize, entries: &[u8]) -> Self {
        assert_eq!(entries.len(), n * n);
        let mut m = GfMat { p, n, e: [0; MAX_N * MAX_N] };
        m.e[..n * n].copy_from_slice(entries);
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.e[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.e[i * self.n + j] = v % self.p;
    }

    pub fn mul(&self, other: &GfMat) -> GfMat {
        debug_assert_eq!(self.n, other.n);
        let n = self.n;
        let p = self.p as u16;
        let mut out = GfMat { p: self.p, n, e: [0; MAX_N * MAX_N] };
        for i in 0..n {
            for k in 0..n {
                let a = self.e[i * n + k] as u16;
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let cell = &mut out.e[i * n + j];
                    *cell = ((*cell as u16 + a * other.e[k * n + j] as u16) % p) as u8;
                }
            }
        }
        out
    }

    /// Gauss-Jordan inverse; panics on a singular input.
    pub fn inverse(&self) -> GfMat {
        let n = self.n;
        let p = self.p;
        let mut a = *self;
        let mut inv = GfMat::identity(p, n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| a.get(r, col) != 0)
                .expect("singular matrix");
            if pivot != col {
                for j in 0..n {
                    let (x, y) = (a.get(col, j), a.get(pivot, j));
                    a.set(col, j, y);
                    a.set(pivot, j, x);
                    let (x, y) = (inv.get(col, j), inv.get(pivot, j));
                    inv.set(col, j, y);
                    inv.set(pivot, j, x);
                }
            }
            let s = inv_mod(a.get(col, col), p);
            for j in 0..n {
                a.set(col, j, (a.get(col, j) as u16 * s as u16 % p as u16) as u8);
                inv.set(col, j, (inv.get(col, j) as u16 * s as u16 % p as u16) as u8);
            }
            for r in 0..n {
                if r == col || a.get(r, col) == 0 {
                    continue;
                }
                let f = a.get(r, col) as u16;
                for j in 0..n {
                    let av = (a.get(r, j) as u16 + (p as u16 - 1) * f % p as u16 * a.get(col, j) as u16) % p as u16;
                    a.set(r, j, av as u8);
                    let iv = (inv.get(r, j) as u16 + (p as u16 - 1) * f % p as u16 * inv.get(col, j) as u16) % p as u16;
                    inv.set(r, j, iv as u8);
                }
            }
        }
        inv
    }

    pub fn det(&self) -> u8 {
        let n = self.n;
        let p = self.p;
        let mut a = *self;
        let mut d: u16 = 1;
        for col in 0..n {
            let pivot = match (col..n).find(|&r| a.get(r, col) != 0) {
                Some(r) => r,
                None => return 0,
            };
            if pivot != col {
                d = d * (p as u16 - 1) % p as u16;
                for j in 0..n {
                    let (x, y) = (a.get(col, j), a.get(pivot, j));
                    a.set(col, j, y);
                    a.set(pivot, j, x);
                }
            }
            d = d * a.get(col, col) as u16 % p as u16;
            let s = inv_mod(a.get(col, col), p) as u16;
            for r in col + 1..n {
                let f = a.get(r, col) as u16 * s % p as u16;
                if f == 0 {
                    continue;
                }
                for j in col..n {
                    let v = (a.get(r, j) as u16 + (p as u16 - f) * a.get(col, j) as u16) % p as u16;
                    a.set(r, j, v as u8);
                }
            }
        }
        d as u8
    }

    pub fn is_upper_uni(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            self.get(i, i) == 1 && (0..i).all(|j| self.get(i, j) == 0)
        })
    }

    pub fn is_lower_uni(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            self.get(i, i) == 1 && (i + 1..n).all(|j| self.get(i, j) == 0)
        })
    }

    /// Injective encoding of the entries, for set membership.
    pub fn key(&self) -> u64 {
        let n = self.n;
        let mut k: u64 = 0;
        for v in &self.e[..n * n] {
            k = k * self.p as u64 + *v as u64;
        }
        k
    }
}

/// Doolittle split M = L U with both factors unitriangular. Exists iff all
/// leading principal minors equal 1; returns None otherwise.
pub(crate) fn unitriangular_lu(m: &GfMat) -> Option<(GfMat, GfMat)> {
    let n = m.n;
    let p = m.p as u16;
    let mut l = GfMat::identity(m.p, n);
    let mut u = GfMat::identity(m.p, n);
    for k in 0..n {
        for j in k..n {
            let mut acc = m.get(k, j) as u16 % p;
            for s in 0..k {
                acc = (acc + (p - 1) * (l.get(k, s) as u16 * u.get(s, j) as u16 % p) % p) % p;
            }
            u.set(k, j, acc as u8);
        }
        if u.get(k, k) != 1 {
            return None;
        }
        for i in k + 1..n {
            let mut acc = m.get(i, k) as u16 % p;
            for s in 0..k {
                acc = (acc + (p - 1) * (l.get(i, s) as u16 * u.get(s, k) as u16 % p) % p) % p;
            }
            l.set(i, k, acc as u8);
        }
    }
    Some((l, u))
}

/// Every matrix in SL_n(F_p), in odometer order over the entries.
pub(crate) fn all_sl(p: u8, n: usize) -> Vec<GfMat> {
    let cells = n * n;
    let total = (p as u64).pow(cells as u32);
    let mut out = Vec::new();
    let mut digits = vec![0u8; cells];
    for _ in 0..total {
        let m = GfMat::from_entries(p, n, &digits);
        if m.det() == 1 {
            out.push(m);
        }
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < p {
                break;
            }
            *d = 0;
        }
    }
    out
}

/// Every unipotent matrix of the given triangular shape, odometer order on
/// the strictly-off-diagonal entries.
pub(crate) fn all_unitriangular(p: u8, n: usize, upper: bool) -> Vec<GfMat> {
    let mut slots = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if (upper && j > i) || (!upper && j < i) {
                slots.push((i, j));
            }
        }
    }
    let total = (p as u64).pow(slots.len() as u32);
    let mut out = Vec::with_capacity(total as usize);
    let mut digits = vec![0u8; slots.len()];
    for _ in 0..total {
        let mut m = GfMat::identity(p, n);
        for (d, &(i, j)) in digits.iter().zip(&slots) {
            m.set(i, j, *d);
        }
        out.push(m);
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < p {
                break;
            }
            *d = 0;
        }
    }
    out
}

/// Peel a unipotent triangular matrix into elementary positions, nearest
/// the diagonal first: returns (i, j, value) with m = prod of E_ij(value)
/// in the returned order.
pub(crate) fn unitriangular_positions(m: &GfMat) -> Vec<(usize, usize, u8)> {
    let n = m.n;
    let p = m.p;
    let upper = m.is_upper_uni();
    assert!(upper || m.is_lower_uni());
    let mut cur = *m;
    let mut out = Vec::new();
    for h in 1..n {
        for i in 0..n - h {
            let (r, c) = if upper { (i, i + h) } else { (i + h, i) };
            let v = cur.get(r, c);
            if v == 0 {
                continue;
            }
            out.push((r, c, v));
            // Left-multiply by E_rc(-v): row_r -= v * row_c. Only entries
            // at strictly larger height move, so the sweep never revisits.
            for j in 0..n {
                let w = (cur.get(r, j) as u16 + (p as u16 - v as u16) * cur.get(c, j) as u16) % p as u16;
                cur.set(r, j, w as u8);
            }
        }
    }
    assert_eq!(cur, GfMat::identity(p, n), "peel must terminate at I");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_det_agree_with_brute_force() {
        for m in all_sl(3, 2) {
            assert_eq!(m.det(), 1);
            let inv = m.inverse();
            assert_eq!(m.mul(&inv), GfMat::identity(3, 2));
        }
    }

    #[test]
    fn sl_counts_match_the_order_formula() {
        // |SL_n(F_p)| = p^(n(n-1)/2) * prod_{k=2..n} (p^k - 1)
        assert_eq!(all_sl(2, 2).len(), 6);
        assert_eq!(all_sl(3, 2).len(), 24);
        assert_eq!(all_sl(5, 2).len(), 120);
        assert_eq!(all_sl(3, 3).len(), 5616);
        assert_eq!(all_sl(2, 4).len(), 20160);
    }

    #[test]
    fn lu_exists_exactly_when_leading_minors_are_one() {
        let mut hits = 0;
        for m in all_sl(3, 3) {
            let minor1 = m.get(0, 0);
            let minor2 = (m.get(0, 0) as i32 * m.get(1, 1) as i32
                - m.get(0, 1) as i32 * m.get(1, 0) as i32)
                .rem_euclid(3) as u8;
            let expect = minor1 == 1 && minor2 == 1;
            match unitriangular_lu(&m) {
                Some((l, u)) => {
                    assert!(expect);
                    assert!(l.is_lower_uni() && u.is_upper_uni());
                    assert_eq!(l.mul(&u), m);
                    hits += 1;
                }
                None => assert!(!expect),
            }
        }
        assert!(hits > 0);
    }

    #[test]
    fn peeled_positions_rebuild_the_matrix() {
        for upper in [true, false] {
            for m in all_unitriangular(3, 3, upper) {
                let mut acc = GfMat::identity(3, 3);
                for (i, j, v) in unitriangular_positions(&m) {
                    let mut e = GfMat::identity(3, 3);
                    e.set(i, j, v);
                    acc = acc.mul(&e);
                }
                assert_eq!(acc, m);
            }
        }
    }
}
