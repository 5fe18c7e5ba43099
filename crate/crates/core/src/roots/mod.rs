//! Finite crystallographic root systems.
//!
//! Roots are coordinate vectors over the simple roots (Bourbaki numbering).
//! Positive roots are generated by the height-layer closure: a candidate
//! beta + alpha_i is a root exactly when p - <beta, alpha_i^vee> > 0, with
//! p the largest k such that beta - k alpha_i is already a root.
//!
//! Positive roots carry a fixed total order: by height, ties broken by
//! lexicographic comparison of the reversed coordinate vector. This puts
//! the simple roots first, in their natural order. Indices 0..m-1 are the
//! positive roots in this order; index m+i is the negative of index i.

pub mod embed;

use smallvec::SmallVec;
use std::collections::HashMap;
use thiserror::Error;

/// Coordinates over the simple roots.
pub type RootCoords = SmallVec<[i16; 8]>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("unknown root system '{0}'")]
    UnknownSystem(String),
    #[error("rank {rank} is out of range for type {series}")]
    RankOutOfRange { series: char, rank: usize },
    #[error("no embedding of {0} into {1}")]
    NoSuchEmbedding(String, String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SystemKind {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl SystemKind {
    pub fn rank(&self) -> usize {
        match *self {
            SystemKind::A(l) | SystemKind::B(l) | SystemKind::C(l) | SystemKind::D(l)
            | SystemKind::E(l) => l,
            SystemKind::F4 => 4,
            SystemKind::G2 => 2,
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(
            self,
            SystemKind::A(_) | SystemKind::D(_) | SystemKind::E(_)
        )
    }

    pub fn parse(s: &str) -> Result<Self, RootError> {
        let err = || RootError::UnknownSystem(s.to_string());
        let mut chars = s.chars();
        let series = chars.next().ok_or_else(err)?;
        let rank: usize = chars.as_str().parse().map_err(|_| err())?;
        let kind = match series {
            'A' if rank >= 1 => SystemKind::A(rank),
            'B' if rank >= 2 => SystemKind::B(rank),
            'C' if rank >= 2 => SystemKind::C(rank),
            'D' if rank >= 3 => SystemKind::D(rank),
            'E' if (6..=8).contains(&rank) => SystemKind::E(rank),
            'F' if rank == 4 => SystemKind::F4,
            'G' if rank == 2 => SystemKind::G2,
            'A' | 'B' | 'C' | 'D' | 'E' | 'F' | 'G' => {
                return Err(RootError::RankOutOfRange { series, rank })
            }
            _ => return Err(err()),
        };
        Ok(kind)
    }

    /// Cartan matrix entries a[i][j] = <alpha_i, alpha_j^vee>.
    fn cartan(&self) -> Vec<Vec<i64>> {
        let l = self.rank();
        let mut a = vec![vec![0i64; l]; l];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut edge = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match *self {
            SystemKind::A(_) => {
                for i in 1..l {
                    edge(i - 1, i);
                }
            }
            SystemKind::B(_) => {
                for i in 1..l - 1 {
                    edge(i - 1, i);
                }
                // Long alpha_{l-1}, short alpha_l.
                a[l - 2][l - 1] = -2;
                a[l - 1][l - 2] = -1;
            }
            SystemKind::C(_) => {
                for i in 1..l - 1 {
                    edge(i - 1, i);
                }
                a[l - 2][l - 1] = -1;
                a[l - 1][l - 2] = -2;
            }
            SystemKind::D(_) => {
                for i in 1..l - 1 {
                    edge(i - 1, i);
                }
                edge(l - 3, l - 1);
            }
            SystemKind::E(_) => {
                // Bourbaki: chain 1-3-4-5-6(-7(-8)), node 2 attached to 4.
                edge(0, 2);
                for i in 3..l {
                    edge(i - 1, i);
                }
                edge(1, 3);
            }
            SystemKind::F4 => {
                edge(0, 1);
                edge(2, 3);
                a[1][2] = -2;
                a[2][1] = -1;
            }
            SystemKind::G2 => {
                a[0][1] = -1;
                a[1][0] = -3;
            }
        }
        a
    }

    /// Half squared lengths d_i, normalized so short roots have d = 1.
    fn simple_lengths(&self) -> Vec<i64> {
        let l = self.rank();
        match *self {
            SystemKind::B(_) => {
                let mut d = vec![2; l];
                d[l - 1] = 1;
                d
            }
            SystemKind::C(_) => {
                let mut d = vec![1; l];
                d[l - 1] = 2;
                d
            }
            SystemKind::F4 => vec![2, 2, 1, 1],
            SystemKind::G2 => vec![1, 3],
            _ => vec![1; l],
        }
    }
}

impl std::fmt::Display for SystemKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            SystemKind::A(l) => write!(f, "A{l}"),
            SystemKind::B(l) => write!(f, "B{l}"),
            SystemKind::C(l) => write!(f, "C{l}"),
            SystemKind::D(l) => write!(f, "D{l}"),
            SystemKind::E(l) => write!(f, "E{l}"),
            SystemKind::F4 => write!(f, "F4"),
            SystemKind::G2 => write!(f, "G2"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: SystemKind,
    cartan: Vec<Vec<i64>>,
    lengths: Vec<i64>,
    positives: Vec<RootCoords>,
    index_of: HashMap<RootCoords, usize>,
}

fn height(c: &RootCoords) -> i64 {
    c.iter().map(|&k| k as i64).sum()
}

/// Total-order key: height, then the reversed coordinate slice.
fn order_key(c: &RootCoords) -> (i64, Vec<i16>) {
    (height(c), c.iter().rev().copied().collect())
}

impl RootSystem {
    pub fn new(kind: SystemKind) -> Self {
        let l = kind.rank();
        let cartan = kind.cartan();
        let lengths = kind.simple_lengths();

        let mut found: HashMap<RootCoords, ()> = HashMap::new();
        let mut layer: Vec<RootCoords> = Vec::new();
        for i in 0..l {
            let mut c: RootCoords = SmallVec::from_elem(0, l);
            c[i] = 1;
            found.insert(c.clone(), ());
            layer.push(c);
        }
        while !layer.is_empty() {
            let mut next: Vec<RootCoords> = Vec::new();
            for beta in &layer {
                for i in 0..l {
                    // p = how far the alpha_i-string through beta descends.
                    let mut p = 0i64;
                    let mut probe = beta.clone();
                    loop {
                        probe[i] -= 1;
                        if probe.iter().all(|&k| k == 0) || found.contains_key(&probe) {
                            if probe.iter().all(|&k| k == 0) {
                                break;
                            }
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = beta
                        .iter()
                        .enumerate()
                        .map(|(j, &k)| k as i64 * cartan[j][i])
                        .sum();
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if found.insert(up.clone(), ()).is_none() {
                            next.push(up);
                        }
                    }
                }
            }
            layer = next;
        }

        let mut positives: Vec<RootCoords> = found.into_keys().collect();
        positives.sort_by_key(order_key);
        let index_of = positives
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), i))
            .collect();
        let sys = RootSystem {
            kind,
            cartan,
            lengths,
            positives,
            index_of,
        };
        debug_assert!((0..l).all(|i| {
            let mut c: RootCoords = SmallVec::from_elem(0, l);
            c[i] = 1;
            sys.index_of[&c] == i
        }));
        sys
    }

    pub fn parse(name: &str) -> Result<Self, RootError> {
        Ok(Self::new(SystemKind::parse(name)?))
    }

    pub fn kind(&self) -> SystemKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.kind.rank()
    }

    /// Number of positive roots.
    pub fn num_positive(&self) -> usize {
        self.positives.len()
    }

    /// Total number of roots (indices run over 0..num_roots()).
    pub fn num_roots(&self) -> usize {
        2 * self.positives.len()
    }

    pub fn is_positive(&self, idx: usize) -> bool {
        idx < self.positives.len()
    }

    pub fn negate(&self, idx: usize) -> usize {
        let m = self.positives.len();
        if idx < m {
            idx + m
        } else {
            idx - m
        }
    }

    /// Coordinates of the root at an index (negatives included).
    pub fn coords(&self, idx: usize) -> RootCoords {
        let m = self.positives.len();
        if idx < m {
            self.positives[idx].clone()
        } else {
            self.positives[idx - m].iter().map(|&k| -k).collect()
        }
    }

    pub fn index_of_coords(&self, c: &RootCoords) -> Option<usize> {
        if let Some(&i) = self.index_of.get(c) {
            return Some(i);
        }
        let neg: RootCoords = c.iter().map(|&k| -k).collect();
        self.index_of.get(&neg).map(|&i| i + self.positives.len())
    }

    pub fn height_of(&self, idx: usize) -> i64 {
        height(&self.coords(idx))
    }

    /// Index of the simple root alpha_i (zero-based).
    pub fn simple(&self, i: usize) -> usize {
        debug_assert!(i < self.rank());
        i
    }

    /// Half squared length of a root: 1 short, 2 or 3 long.
    pub fn length(&self, idx: usize) -> i64 {
        let c = self.coords(idx);
        let two_norm = self.bilinear(&c, &c);
        debug_assert_eq!(two_norm % 2, 0);
        two_norm / 2
    }

    pub fn is_long(&self, idx: usize) -> bool {
        let max = (0..self.rank()).map(|i| self.lengths[i]).max().unwrap();
        self.length(idx) == max
    }

    /// The invariant symmetric form (gamma, delta).
    fn bilinear(&self, c: &RootCoords, d: &RootCoords) -> i64 {
        let l = self.rank();
        let mut acc = 0i64;
        for i in 0..l {
            if c[i] == 0 {
                continue;
            }
            for j in 0..l {
                if d[j] == 0 {
                    continue;
                }
                acc += c[i] as i64 * d[j] as i64 * self.lengths[j] * self.cartan[i][j];
            }
        }
        acc
    }

    /// <gamma, delta^vee> = 2(gamma,delta)/(delta,delta).
    pub fn pairing(&self, gamma: usize, delta: usize) -> i64 {
        let c = self.coords(gamma);
        let d = self.coords(delta);
        let num = self.bilinear(&c, &d);
        let den = self.bilinear(&d, &d) / 2;
        debug_assert_eq!(num % den, 0, "coroot pairing of roots is integral");
        num / den
    }

    /// Index of gamma + delta if it is a root.
    pub fn sum(&self, gamma: usize, delta: usize) -> Option<usize> {
        let c = self.coords(gamma);
        let d = self.coords(delta);
        let s: RootCoords = c.iter().zip(d.iter()).map(|(&a, &b)| a + b).collect();
        if s.iter().all(|&k| k == 0) {
            return None;
        }
        self.index_of_coords(&s)
    }

    /// Largest p >= 0 with beta - p*alpha a root.
    pub fn string_down(&self, beta: usize, alpha: usize) -> i64 {
        let a = self.coords(alpha);
        let mut probe = self.coords(beta);
        let mut p = 0;
        loop {
            for (x, &s) in probe.iter_mut().zip(a.iter()) {
                *x -= s;
            }
            if probe.iter().all(|&k| k == 0) || self.index_of_coords(&probe).is_none() {
                return p;
            }
            p += 1;
        }
    }

    /// Reflection s_delta(gamma) as a root index.
    pub fn reflect(&self, delta: usize, gamma: usize) -> usize {
        let n = self.pairing(gamma, delta);
        let d = self.coords(delta);
        let mut c = self.coords(gamma);
        for (x, &s) in c.iter_mut().zip(d.iter()) {
            *x -= (n as i16) * s;
        }
        self.index_of_coords(&c)
            .expect("reflection permutes the roots")
    }

    /// All (i, j, index of i*alpha + j*beta) with i, j >= 1, ordered by
    /// total degree i+j, ties by smaller i: the order in which commutator
    /// relation factors are written. Only meaningful for beta != +-alpha.
    pub fn string_combinations(&self, alpha: usize, beta: usize) -> Vec<(i32, i32, usize)> {
        debug_assert!(alpha != beta && alpha != self.negate(beta));
        let mut out = Vec::new();
        let a = self.coords(alpha);
        let b = self.coords(beta);
        for total in 2..=5i32 {
            for i in 1..total {
                let j = total - i;
                let c: RootCoords = a
                    .iter()
                    .zip(b.iter())
                    .map(|(&x, &y)| (i as i16) * x + (j as i16) * y)
                    .collect();
                if c.iter().all(|&k| k == 0) {
                    continue;
                }
                if let Some(idx) = self.index_of_coords(&c) {
                    out.push((i, j, idx));
                }
            }
        }
        out
    }

    /// The extraspecial decomposition of a non-simple positive root: the
    /// pair (a, b) of positive roots with a + b = gamma and a least in the
    /// total order.
    pub fn extraspecial_pair(&self, gamma: usize) -> Option<(usize, usize)> {
        if !self.is_positive(gamma) || self.height_of(gamma) == 1 {
            return None;
        }
        let g = self.coords(gamma);
        for a in 0..gamma {
            let rest: RootCoords = g
                .iter()
                .zip(self.positives[a].iter())
                .map(|(&x, &y)| x - y)
                .collect();
            if rest.iter().all(|&k| k >= 0) {
                if let Some(&b) = self.index_of.get(&rest) {
                    return Some((a, b));
                }
            }
        }
        unreachable!("every non-simple positive root splits")
    }

    /// Positive roots supported entirely on a set of simple roots.
    pub fn positives_supported_on(&self, simples: &[usize]) -> Vec<usize> {
        let mask: Vec<bool> = (0..self.rank()).map(|i| simples.contains(&i)).collect();
        (0..self.positives.len())
            .filter(|&i| {
                self.positives[i]
                    .iter()
                    .enumerate()
                    .all(|(j, &k)| k == 0 || mask[j])
            })
            .collect()
    }

    /// Order of the Weyl group, by the orbit-stabilizer chain: the
    /// pointwise stabilizer of a set of roots is generated by the
    /// reflections fixing them all, so the product of successive orbit
    /// sizes over a chain of constraints is the group order.
    pub fn weyl_order(&self) -> u128 {
        let mut constraints: Vec<RootCoords> = Vec::new();
        let mut order: u128 = 1;
        loop {
            let active: Vec<RootCoords> = self
                .positives
                .iter()
                .filter(|r| {
                    constraints
                        .iter()
                        .all(|c| self.bilinear(r, c) == 0)
                })
                .cloned()
                .collect();
            let Some(start) = active.first().cloned() else {
                return order;
            };
            // Orbit of `start` under reflections in the active roots.
            let mut orbit: Vec<RootCoords> = vec![start.clone()];
            let mut seen: HashMap<RootCoords, ()> = HashMap::new();
            seen.insert(start.clone(), ());
            let mut head = 0;
            while head < orbit.len() {
                let cur = orbit[head].clone();
                head += 1;
                for refl in &active {
                    let den = self.bilinear(refl, refl) / 2;
                    let n = self.bilinear(&cur, refl) / den;
                    let img: RootCoords = cur
                        .iter()
                        .zip(refl.iter())
                        .map(|(&x, &s)| x - (n as i16) * s)
                        .collect();
                    if seen.insert(img.clone(), ()).is_none() {
                        orbit.push(img);
                    }
                }
            }
            order *= orbit.len() as u128;
            constraints.push(start);
        }
    }

    /// Highest root index.
    pub fn highest(&self) -> usize {
        self.positives.len() - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coords_of(v: &[i16]) -> RootCoords {
        v.iter().copied().collect()
    }

    #[test]
    fn root_counts_match_the_classification() {
        let cases = [
            ("A1", 2),
            ("A2", 6),
            ("A3", 12),
            ("B2", 8),
            ("B3", 18),
            ("C3", 18),
            ("D4", 24),
            ("G2", 12),
            ("F4", 48),
            ("E6", 72),
            ("E7", 126),
            ("E8", 240),
        ];
        for (name, count) in cases {
            let rs = RootSystem::parse(name).unwrap();
            assert_eq!(rs.num_roots(), count, "{name}");
        }
    }

    #[test]
    fn weyl_orders_match_the_classification() {
        let cases: [(&str, u128); 11] = [
            ("A1", 2),
            ("A2", 6),
            ("A3", 24),
            ("B2", 8),
            ("B3", 48),
            ("C3", 48),
            ("D4", 192),
            ("G2", 12),
            ("F4", 1152),
            ("E6", 51840),
            ("E7", 2903040),
        ];
        for (name, order) in cases {
            let rs = RootSystem::parse(name).unwrap();
            assert_eq!(rs.weyl_order(), order, "{name}");
        }
    }

    #[test]
    fn e8_weyl_order() {
        let rs = RootSystem::parse("E8").unwrap();
        assert_eq!(rs.weyl_order(), 696_729_600);
    }

    #[test]
    fn highest_roots_are_the_known_ones() {
        let cases: [(&str, &[i16]); 7] = [
            ("A2", &[1, 1]),
            ("B3", &[1, 2, 2]),
            ("C3", &[2, 2, 1]),
            ("D4", &[1, 2, 1, 1]),
            ("G2", &[3, 2]),
            ("F4", &[2, 3, 4, 2]),
            ("E8", &[2, 3, 4, 6, 5, 4, 3, 2]),
        ];
        for (name, coords) in cases {
            let rs = RootSystem::parse(name).unwrap();
            assert_eq!(rs.coords(rs.highest()), coords_of(coords), "{name}");
        }
    }

    #[test]
    fn total_order_puts_simples_first_in_natural_order() {
        for name in ["A2", "B3", "D4", "F4", "E6"] {
            let rs = RootSystem::parse(name).unwrap();
            for i in 0..rs.rank() {
                let mut c: RootCoords = SmallVec::from_elem(0, rs.rank());
                c[i] = 1;
                assert_eq!(rs.coords(i), c, "{name} simple {i}");
            }
        }
    }

    #[test]
    fn negation_and_indexing_round_trip() {
        let rs = RootSystem::parse("B3").unwrap();
        for idx in 0..rs.num_roots() {
            let c = rs.coords(idx);
            assert_eq!(rs.index_of_coords(&c), Some(idx));
            assert_eq!(rs.negate(rs.negate(idx)), idx);
            let n = rs.coords(rs.negate(idx));
            let sum: Vec<i16> = c.iter().zip(n.iter()).map(|(&a, &b)| a + b).collect();
            assert!(sum.iter().all(|&k| k == 0));
        }
    }

    #[test]
    fn pairings_are_cartan_integers() {
        for name in ["B2", "G2", "F4", "C3"] {
            let rs = RootSystem::parse(name).unwrap();
            for a in 0..rs.num_roots() {
                for b in 0..rs.num_roots() {
                    let p = rs.pairing(a, b);
                    assert!(
                        (-3..=3).contains(&p),
                        "{name}: pairing {p} out of range"
                    );
                    if a == b {
                        assert_eq!(p, 2);
                    }
                }
            }
        }
    }

    #[test]
    fn reflections_permute_roots_and_are_involutions() {
        let rs = RootSystem::parse("F4").unwrap();
        for d in 0..rs.num_roots() {
            let mut image = vec![false; rs.num_roots()];
            for g in 0..rs.num_roots() {
                let r = rs.reflect(d, g);
                assert_eq!(rs.reflect(d, r), g);
                image[r] = true;
            }
            assert!(image.iter().all(|&b| b));
        }
    }

    #[test]
    fn g2_lengths_and_long_subsystem() {
        let rs = RootSystem::parse("G2").unwrap();
        let longs: Vec<usize> = (0..rs.num_positive()).filter(|&i| rs.is_long(i)).collect();
        assert_eq!(longs.len(), 3);
        for &i in &longs {
            assert_eq!(rs.length(i), 3);
        }
        // alpha_2 is the long simple root.
        assert!(rs.is_long(1));
        assert!(!rs.is_long(0));
    }

    #[test]
    fn extraspecial_pairs_decompose_every_tall_root() {
        for name in ["A3", "B3", "C3", "D4", "G2", "F4"] {
            let rs = RootSystem::parse(name).unwrap();
            for g in rs.rank()..rs.num_positive() {
                let (a, b) = rs.extraspecial_pair(g).unwrap();
                assert!(a < b, "{name}: pair ordering");
                assert_eq!(rs.sum(a, b), Some(g), "{name}: pair sums back");
                assert_eq!(
                    rs.height_of(a) + rs.height_of(b),
                    rs.height_of(g)
                );
            }
        }
    }

    #[test]
    fn string_combinations_follow_degree_order() {
        let rs = RootSystem::parse("G2").unwrap();
        // alpha_1 and alpha_2 span all of G2: the string has four terms.
        let combos = rs.string_combinations(0, 1);
        let shape: Vec<(i32, i32)> = combos.iter().map(|&(i, j, _)| (i, j)).collect();
        assert_eq!(shape, vec![(1, 1), (2, 1), (3, 1), (3, 2)]);
        // Simply-laced pairs never exceed (1,1).
        let a3 = RootSystem::parse("A3").unwrap();
        for a in 0..a3.num_roots() {
            for b in 0..a3.num_roots() {
                if b == a || b == a3.negate(a) {
                    continue;
                }
                let combos = a3.string_combinations(a, b);
                assert!(combos.len() <= 1);
                if let Some(&(i, j, _)) = combos.first() {
                    assert_eq!((i, j), (1, 1));
                }
            }
        }
    }

    #[test]
    fn supported_subsystems_have_the_right_sizes() {
        let rs = RootSystem::parse("A3").unwrap();
        // Dropping the last simple root leaves A2.
        let sub = rs.positives_supported_on(&[0, 1]);
        assert_eq!(sub.len(), 3);
        let d4 = RootSystem::parse("D4").unwrap();
        // alpha_2 is the branch node; dropping it leaves three A1's.
        let legs = d4.positives_supported_on(&[0, 2, 3]);
        assert_eq!(legs.len(), 3);
    }

    #[test]
    fn bad_names_are_rejected() {
        assert!(RootSystem::parse("E9").is_err());
        assert!(RootSystem::parse("B1").is_err());
        assert!(RootSystem::parse("H4").is_err());
        assert!(RootSystem::parse("A0").is_err());
        assert!(RootSystem::parse("X2").is_err());
    }
}
