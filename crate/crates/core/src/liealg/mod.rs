//! Integral structure constants of the simple Lie algebras, derived rather
//! than transcribed.
//!
//! The basis is indexed by roots plus one Cartan element per simple root.
//! Brackets of root vectors carry constants N(alpha, beta); the table is
//! built by induction on root height from three identities that pin every
//! value down once the extraspecial pairs are normalized to +(p+1):
//!
//! * antisymmetry and the negation rule N(-a,-b) = -N(a,b);
//! * the triple rule: a+b+c = 0 implies N(a,b)/L(c) = N(b,c)/L(a),
//!   with L the half squared length;
//! * the quadruple rule: a+b+c+d = 0 with no two opposite implies the sum
//!   of the three products N(x,y)N(z,w)/L(x+y) over the pairings is zero.
//!
//! The derived table is then certified wholesale: [`adjoint`] checks that
//! ad is a Lie homomorphism, which is exactly the Jacobi identity for
//! every constant, and the commutator-coefficient derivation in
//! [`commutator`] re-proves the group-level relations from scratch.

pub mod adjoint;
pub mod commutator;
mod poly2;

use crate::roots::RootSystem;
use std::collections::HashMap;

/// Small exact fraction for intermediate values in the quadruple rule.
#[derive(Clone, Copy, Debug)]
struct Frac {
    num: i64,
    den: i64,
}

impl Frac {
    fn zero() -> Self {
        Frac { num: 0, den: 1 }
    }

    fn new(num: i64, den: i64) -> Self {
        assert!(den != 0);
        Frac { num, den }.reduced()
    }

    fn reduced(self) -> Self {
        let g = gcd(self.num.abs(), self.den.abs()).max(1);
        let sign = if self.den < 0 { -1 } else { 1 };
        Frac {
            num: sign * self.num / g,
            den: sign * self.den / g,
        }
    }

    fn add(self, other: Frac) -> Frac {
        Frac::new(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )
    }

    fn mul_int(self, k: i64) -> Frac {
        Frac::new(self.num * k, self.den)
    }

    fn div_int(self, k: i64) -> Frac {
        Frac::new(self.num, self.den * k)
    }

    fn to_int(self) -> i64 {
        assert_eq!(self.den, 1, "structure constant must be integral");
        self.num
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Clone, Debug)]
pub struct StructureConstants {
    rs: RootSystem,
    /// N(alpha, beta) for positive pairs with alpha < beta and
    /// alpha + beta a (positive) root.
    pos_pairs: HashMap<(usize, usize), i64>,
}

impl StructureConstants {
    pub fn new(rs: &RootSystem) -> Self {
        let mut sc = StructureConstants {
            rs: rs.clone(),
            pos_pairs: HashMap::new(),
        };
        let m = rs.num_positive();
        // Ascending index order refines ascending height, so every value
        // the recursion formulas consult is already present.
        for gamma in 0..m {
            let Some((a, b)) = rs.extraspecial_pair(gamma) else {
                continue;
            };
            let p = rs.string_down(b, a);
            sc.pos_pairs.insert((a, b), p + 1);
            for alpha in 0..m {
                let Some(beta) = complement(rs, gamma, alpha) else {
                    continue;
                };
                if alpha >= beta || (alpha, beta) == (a, b) {
                    continue;
                }
                let val = sc.special_pair_value(alpha, beta, a, b, gamma);
                sc.pos_pairs.insert((alpha, beta), val);
            }
        }
        sc
    }

    /// Quadruple rule applied to (alpha, beta, -a, -b): solves for
    /// N(alpha, beta) given the extraspecial constant N(a, b) of the sum.
    fn special_pair_value(&self, alpha: usize, beta: usize, a: usize, b: usize, gamma: usize) -> i64 {
        let rs = &self.rs;
        let neg = |i: usize| rs.negate(i);
        let mut acc = Frac::zero();
        if let Some(ba) = rs.sum(beta, neg(a)) {
            let t = self.n(beta, neg(a)).unwrap() * self.n(alpha, neg(b)).unwrap();
            acc = acc.add(Frac::new(t, rs.length(ba)));
        }
        if let Some(aa) = rs.sum(alpha, neg(a)) {
            let t = self.n(neg(a), alpha).unwrap() * self.n(beta, neg(b)).unwrap();
            acc = acc.add(Frac::new(t, rs.length(aa)));
        }
        let n_ab = self.pos_pairs[&(a, b)];
        let val = acc.mul_int(rs.length(gamma)).div_int(n_ab).to_int();
        assert!(val != 0, "bracket of roots summing to a root is nonzero");
        val
    }

    pub fn system(&self) -> &RootSystem {
        &self.rs
    }

    /// Half squared length of a root.
    pub fn length(&self, idx: usize) -> i64 {
        self.rs.length(idx)
    }

    /// N(x, y) for root indices with x + y a root; None when x + y is not
    /// a root (including y = -x, whose bracket is a Cartan element).
    pub fn n(&self, x: usize, y: usize) -> Option<i64> {
        let rs = &self.rs;
        let m = rs.num_positive();
        let sum = rs.sum(x, y)?;
        let val = match (x < m, y < m) {
            (true, true) => self.pos_lookup(x, y),
            (false, false) => -self.pos_lookup(x - m, y - m),
            (true, false) => {
                // x = xi > 0, y = -eta. The triple rule moves the value to
                // a positive pair below gamma in height.
                let xi = x;
                let eta = y - m;
                if sum < m {
                    // xi - eta = rho > 0, so eta + rho = xi.
                    let rho = sum;
                    exact_div(
                        -rs.length(rho) * self.pos_lookup(eta, rho),
                        rs.length(xi),
                    )
                } else {
                    // xi - eta = -sigma, so xi + sigma = eta.
                    let sigma = sum - m;
                    exact_div(
                        -rs.length(sigma) * self.pos_lookup(xi, sigma),
                        rs.length(eta),
                    )
                }
            }
            (false, true) => -self.n(y, x).unwrap(),
        };
        Some(val)
    }

    fn pos_lookup(&self, alpha: usize, beta: usize) -> i64 {
        if alpha < beta {
            self.pos_pairs[&(alpha, beta)]
        } else {
            -self.pos_pairs[&(beta, alpha)]
        }
    }

    /// Coordinates of the coroot of any root over the simple coroots:
    /// gamma^vee = sum_i k_i L(alpha_i)/L(gamma) alpha_i^vee.
    pub fn coroot_coords(&self, idx: usize) -> Vec<i64> {
        let rs = &self.rs;
        let c = rs.coords(idx);
        let lg = rs.length(idx);
        (0..rs.rank())
            .map(|i| exact_div(c[i] as i64 * rs.length(i), lg))
            .collect()
    }
}

fn exact_div(num: i64, den: i64) -> i64 {
    assert_eq!(num % den, 0, "exact integral division in constant table");
    num / den
}

/// Positive index beta with alpha + beta = gamma, if it exists.
fn complement(rs: &RootSystem, gamma: usize, alpha: usize) -> Option<usize> {
    let g = rs.coords(gamma);
    let a = rs.coords(alpha);
    let rest: crate::roots::RootCoords = g.iter().zip(a.iter()).map(|(&x, &y)| x - y).collect();
    if rest.iter().all(|&k| k == 0) || rest.iter().any(|&k| k < 0) {
        return None;
    }
    let idx = rs.index_of_coords(&rest)?;
    rs.is_positive(idx).then_some(idx)
}

/// Dense integer matrices for representation work; small and exact.
pub type IntMat = Vec<Vec<i64>>;

pub fn int_zero(n: usize) -> IntMat {
    vec![vec![0; n]; n]
}

pub fn int_mul(a: &IntMat, b: &IntMat) -> IntMat {
    let n = a.len();
    let mut out = int_zero(n);
    for i in 0..n {
        for k in 0..n {
            let v = a[i][k];
            if v == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += v * b[k][j];
            }
        }
    }
    out
}

pub fn int_bracket(a: &IntMat, b: &IntMat) -> IntMat {
    let ab = int_mul(a, b);
    let ba = int_mul(b, a);
    ab.into_iter()
        .zip(ba)
        .map(|(r1, r2)| r1.into_iter().zip(r2).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn int_scale_div(m: &IntMat, den: i64) -> IntMat {
    m.iter()
        .map(|row| row.iter().map(|&v| exact_div(v, den)).collect())
        .collect()
}

pub fn int_is_zero(m: &IntMat) -> bool {
    m.iter().all(|r| r.iter().all(|&v| v == 0))
}

/// Extend a Lie-algebra representation from the simple root vectors to all
/// root vectors by the extraspecial induction
/// rho(e_gamma) = [rho(e_a), rho(e_b)] / N(a, b).
///
/// `simple_pos[i]` and `simple_neg[i]` are the images of e_{alpha_i} and
/// e_{-alpha_i}. Returns images indexed like roots (positives then
/// negatives). Exact division panics if the inputs do not actually span a
/// representation compatible with the constants.
pub fn extend_rep(
    consts: &StructureConstants,
    simple_pos: &[IntMat],
    simple_neg: &[IntMat],
) -> Vec<IntMat> {
    let rs = consts.system();
    let m = rs.num_positive();
    let l = rs.rank();
    let dim = simple_pos[0].len();
    let mut images: Vec<Option<IntMat>> = vec![None; 2 * m];
    for i in 0..l {
        assert_eq!(simple_pos[i].len(), dim);
        images[i] = Some(simple_pos[i].clone());
        images[m + i] = Some(simple_neg[i].clone());
    }
    for gamma in l..m {
        let (a, b) = rs.extraspecial_pair(gamma).expect("non-simple positive root");
        let n = consts.n(a, b).unwrap();
        let pos = int_scale_div(
            &int_bracket(images[a].as_ref().unwrap(), images[b].as_ref().unwrap()),
            n,
        );
        images[gamma] = Some(pos);
        let n_neg = consts.n(rs.negate(a), rs.negate(b)).unwrap();
        let neg = int_scale_div(
            &int_bracket(
                images[m + a].as_ref().unwrap(),
                images[m + b].as_ref().unwrap(),
            ),
            n_neg,
        );
        images[m + gamma] = Some(neg);
    }
    images.into_iter().map(Option::unwrap).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::RootSystem;

    #[test]
    fn a2_constants_are_signs() {
        let rs = RootSystem::parse("A2").unwrap();
        let sc = StructureConstants::new(&rs);
        // The extraspecial pair (alpha_1, alpha_2) is normalized to +1.
        assert_eq!(sc.n(0, 1), Some(1));
        assert_eq!(sc.n(1, 0), Some(-1));
        for x in 0..rs.num_roots() {
            for y in 0..rs.num_roots() {
                if let Some(v) = sc.n(x, y) {
                    assert_eq!(v.abs(), 1, "A2 constant at ({x},{y})");
                }
            }
        }
    }

    #[test]
    fn magnitudes_follow_the_string_law() {
        // |N(x,y)| = p + 1 with p the depth of the y-string through x.
        for name in ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2", "F4"] {
            let rs = RootSystem::parse(name).unwrap();
            let sc = StructureConstants::new(&rs);
            for x in 0..rs.num_roots() {
                for y in 0..rs.num_roots() {
                    if y == x || y == rs.negate(x) {
                        continue;
                    }
                    if let Some(v) = sc.n(x, y) {
                        let p = rs.string_down(y, x);
                        assert_eq!(
                            v.abs(),
                            p + 1,
                            "{name}: |N| at ({x},{y})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn antisymmetry_and_negation_rules() {
        for name in ["B3", "G2", "F4"] {
            let rs = RootSystem::parse(name).unwrap();
            let sc = StructureConstants::new(&rs);
            for x in 0..rs.num_roots() {
                for y in 0..rs.num_roots() {
                    let Some(v) = sc.n(x, y) else { continue };
                    assert_eq!(sc.n(y, x), Some(-v));
                    assert_eq!(sc.n(rs.negate(x), rs.negate(y)), Some(-v));
                }
            }
        }
    }

    #[test]
    fn magnitude_ranges_by_type() {
        let collect_mags = |name: &str| -> std::collections::BTreeSet<i64> {
            let rs = RootSystem::parse(name).unwrap();
            let sc = StructureConstants::new(&rs);
            let mut mags = std::collections::BTreeSet::new();
            for x in 0..rs.num_roots() {
                for y in 0..rs.num_roots() {
                    if let Some(v) = sc.n(x, y) {
                        mags.insert(v.abs());
                    }
                }
            }
            mags
        };
        assert_eq!(collect_mags("A3"), [1].into());
        assert_eq!(collect_mags("D4"), [1].into());
        assert_eq!(collect_mags("B2"), [1, 2].into());
        assert_eq!(collect_mags("C3"), [1, 2].into());
        assert_eq!(collect_mags("F4"), [1, 2].into());
        assert_eq!(collect_mags("G2"), [1, 2, 3].into());
    }

    #[test]
    fn coroot_coordinates_are_integral_and_correct_on_simples() {
        for name in ["A2", "B3", "C3", "G2", "F4", "E6"] {
            let rs = RootSystem::parse(name).unwrap();
            let sc = StructureConstants::new(&rs);
            for i in 0..rs.rank() {
                let mut expect = vec![0i64; rs.rank()];
                expect[i] = 1;
                assert_eq!(sc.coroot_coords(i), expect);
            }
            for idx in 0..rs.num_roots() {
                // Pairing of any root with gamma^vee must match the
                // coordinate expansion.
                let cc = sc.coroot_coords(idx);
                for beta in 0..rs.num_roots() {
                    let direct = rs.pairing(beta, idx);
                    let via_coords: i64 = (0..rs.rank())
                        .map(|i| cc[i] * rs.pairing(beta, i))
                        .sum();
                    assert_eq!(direct, via_coords, "{name} root {idx}");
                }
            }
        }
    }

    #[test]
    fn highest_root_coroot_in_g2() {
        let rs = RootSystem::parse("G2").unwrap();
        let sc = StructureConstants::new(&rs);
        // Highest root 3a1+2a2 is long (L=3): coroot = (3*1/3, 2*3/3) = (1, 2).
        assert_eq!(sc.coroot_coords(rs.highest()), vec![1, 2]);
    }
}
