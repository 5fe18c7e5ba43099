//! Subsystem embeddings: a copy of a smaller root system sitting inside a
//! larger one, presented by the images of its simple roots.
//!
//! Two constructions exist. The searched embeddings (`A2LongRoots`,
//! `A3Standard`) take the first tuple of candidate roots, in lexicographic
//! index order, whose mutual pairings reproduce the subsystem Cartan
//! matrix. The fixed embeddings (`D5InE6`, `DlInDl1`, `ElInEl1`) name
//! specific simple-root subsets of the target diagram.
//!
//! Either way the embedding extends linearly to every root of the
//! subsystem, and construction verifies that each extended image really is
//! a root of the target.

use super::{RootCoords, RootError, RootSystem, SystemKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedEmbedding {
    /// An A2 spanned by long roots: the first pair of long roots with
    /// mutual pairing -1.
    A2LongRoots,
    /// The first A3 chain among the simple roots.
    A3Standard,
    /// D5 on the E6 simple roots alpha_1..alpha_5.
    D5InE6,
    /// D_l inside D_{l+1}, dropping the first simple root.
    DlInDl1,
    /// E_l inside E_{l+1}, dropping the last simple root.
    ElInEl1,
}

impl NamedEmbedding {
    pub fn parse(s: &str) -> Result<Self, RootError> {
        match s {
            "A2-long" => Ok(NamedEmbedding::A2LongRoots),
            "A3-standard" => Ok(NamedEmbedding::A3Standard),
            "D5-in-E6" => Ok(NamedEmbedding::D5InE6),
            "D-drop-first" => Ok(NamedEmbedding::DlInDl1),
            "E-drop-last" => Ok(NamedEmbedding::ElInEl1),
            other => Err(RootError::UnknownSystem(format!("embedding '{other}'"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            NamedEmbedding::A2LongRoots => "A2-long",
            NamedEmbedding::A3Standard => "A3-standard",
            NamedEmbedding::D5InE6 => "D5-in-E6",
            NamedEmbedding::DlInDl1 => "D-drop-first",
            NamedEmbedding::ElInEl1 => "E-drop-last",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SubsystemEmbedding {
    target: RootSystem,
    sub: RootSystem,
    /// Target root index of each positive subsystem root.
    image_pos: Vec<usize>,
}

impl SubsystemEmbedding {
    /// Build from explicit images of the subsystem's simple roots,
    /// verifying pairings and the linear extension.
    pub fn from_simple_images(
        target: &RootSystem,
        sub_kind: SystemKind,
        images: &[usize],
    ) -> Result<Self, RootError> {
        let sub = RootSystem::new(sub_kind);
        let err = || RootError::NoSuchEmbedding(sub_kind.to_string(), target.kind().to_string());
        if images.len() != sub.rank() {
            return Err(err());
        }
        for a in 0..images.len() {
            for b in 0..images.len() {
                if target.pairing(images[a], images[b]) != sub.pairing(a, b) {
                    return Err(err());
                }
            }
        }
        let image_pos = extend_linearly(target, &sub, images).ok_or_else(err)?;
        Ok(SubsystemEmbedding {
            target: target.clone(),
            sub,
            image_pos,
        })
    }

    pub fn named(target: &RootSystem, kind: NamedEmbedding) -> Result<Self, RootError> {
        match kind {
            NamedEmbedding::A2LongRoots => {
                let candidates: Vec<usize> = (0..target.num_roots())
                    .filter(|&i| target.is_long(i))
                    .collect();
                search(target, SystemKind::A(2), &candidates)
            }
            NamedEmbedding::A3Standard => {
                let simples: Vec<usize> = (0..target.rank()).collect();
                search(target, SystemKind::A(3), &simples)
            }
            NamedEmbedding::D5InE6 => {
                if target.kind() != SystemKind::E(6) {
                    return Err(RootError::NoSuchEmbedding(
                        "D5".into(),
                        target.kind().to_string(),
                    ));
                }
                // Branch node alpha_4 carries legs alpha_2 and alpha_5;
                // chain alpha_1 - alpha_3 leads in.
                Self::from_simple_images(target, SystemKind::D(5), &[0, 2, 3, 1, 4])
            }
            NamedEmbedding::DlInDl1 => {
                let SystemKind::D(l1) = target.kind() else {
                    return Err(RootError::NoSuchEmbedding(
                        "D(l)".into(),
                        target.kind().to_string(),
                    ));
                };
                if l1 < 4 {
                    return Err(RootError::RankOutOfRange {
                        series: 'D',
                        rank: l1 - 1,
                    });
                }
                let images: Vec<usize> = (1..l1).collect();
                Self::from_simple_images(target, SystemKind::D(l1 - 1), &images)
            }
            NamedEmbedding::ElInEl1 => {
                let SystemKind::E(l1) = target.kind() else {
                    return Err(RootError::NoSuchEmbedding(
                        "E(l)".into(),
                        target.kind().to_string(),
                    ));
                };
                if l1 < 7 {
                    return Err(RootError::RankOutOfRange {
                        series: 'E',
                        rank: l1 - 1,
                    });
                }
                let images: Vec<usize> = (0..l1 - 1).collect();
                Self::from_simple_images(target, SystemKind::E(l1 - 1), &images)
            }
        }
    }

    pub fn sub(&self) -> &RootSystem {
        &self.sub
    }

    pub fn target(&self) -> &RootSystem {
        &self.target
    }

    /// Target index of any subsystem root index (negatives included).
    pub fn image(&self, sub_idx: usize) -> usize {
        let m = self.sub.num_positive();
        if sub_idx < m {
            self.image_pos[sub_idx]
        } else {
            self.target.negate(self.image_pos[sub_idx - m])
        }
    }

    pub fn simple_images(&self) -> Vec<usize> {
        (0..self.sub.rank()).map(|i| self.image(i)).collect()
    }
}

fn extend_linearly(
    target: &RootSystem,
    sub: &RootSystem,
    images: &[usize],
) -> Option<Vec<usize>> {
    let image_coords: Vec<RootCoords> = images.iter().map(|&i| target.coords(i)).collect();
    let mut out = Vec::with_capacity(sub.num_positive());
    for idx in 0..sub.num_positive() {
        let k = sub.coords(idx);
        let mut c: RootCoords = RootCoords::from_elem(0, target.rank());
        for (i, &ki) in k.iter().enumerate() {
            for (j, x) in c.iter_mut().enumerate() {
                *x += ki * image_coords[i][j];
            }
        }
        out.push(target.index_of_coords(&c)?);
    }
    Some(out)
}

/// First tuple of candidates, in lexicographic order, matching the
/// subsystem's Cartan pairings.
fn search(
    target: &RootSystem,
    sub_kind: SystemKind,
    candidates: &[usize],
) -> Result<SubsystemEmbedding, RootError> {
    let sub = RootSystem::new(sub_kind);
    let k = sub.rank();
    let mut chosen: Vec<usize> = Vec::with_capacity(k);

    fn backtrack(
        target: &RootSystem,
        sub: &RootSystem,
        candidates: &[usize],
        chosen: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        if chosen.len() == sub.rank() {
            return Some(chosen.clone());
        }
        let pos = chosen.len();
        for &cand in candidates {
            if chosen
                .iter()
                .any(|&c| c == cand || c == target.negate(cand))
            {
                continue;
            }
            let ok = chosen.iter().enumerate().all(|(prev, &c)| {
                target.pairing(c, cand) == sub.pairing(prev, pos)
                    && target.pairing(cand, c) == sub.pairing(pos, prev)
            });
            if !ok {
                continue;
            }
            chosen.push(cand);
            if let Some(found) = backtrack(target, sub, candidates, chosen) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }

    let err = || RootError::NoSuchEmbedding(sub_kind.to_string(), target.kind().to_string());
    // Retry the search until a tuple also extends linearly; Cartan-matching
    // tuples of actual roots always do, but the check keeps this total.
    let images = backtrack(target, &sub, candidates, &mut chosen).ok_or_else(err)?;
    let image_pos = extend_linearly(target, &sub, &images).ok_or_else(err)?;
    Ok(SubsystemEmbedding {
        target: target.clone(),
        sub,
        image_pos,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn long_a2_in_g2_uses_the_long_roots() {
        let g2 = RootSystem::parse("G2").unwrap();
        let emb = SubsystemEmbedding::named(&g2, NamedEmbedding::A2LongRoots).unwrap();
        assert_eq!(emb.simple_images(), vec![1, 4]);
        // All three positive images are long.
        for idx in 0..emb.sub().num_positive() {
            assert!(g2.is_long(emb.image(idx)));
        }
        // Negative subsystem roots map to negatives of the positive images.
        let m = emb.sub().num_positive();
        assert_eq!(emb.image(m), g2.negate(1));
    }

    #[test]
    fn long_a2_in_simply_laced_is_the_identity_copy() {
        let a2 = RootSystem::parse("A2").unwrap();
        let emb = SubsystemEmbedding::named(&a2, NamedEmbedding::A2LongRoots).unwrap();
        assert_eq!(emb.simple_images(), vec![0, 1]);
    }

    #[test]
    fn c2_has_no_long_a2() {
        let c2 = RootSystem::parse("C2").unwrap();
        let e = SubsystemEmbedding::named(&c2, NamedEmbedding::A2LongRoots);
        assert!(matches!(e, Err(RootError::NoSuchEmbedding(_, _))));
    }

    #[test]
    fn f4_has_a_long_a2() {
        let f4 = RootSystem::parse("F4").unwrap();
        let emb = SubsystemEmbedding::named(&f4, NamedEmbedding::A2LongRoots).unwrap();
        let images = emb.simple_images();
        assert!(images.iter().all(|&i| f4.is_long(i)));
        assert_eq!(f4.pairing(images[0], images[1]), -1);
    }

    #[test]
    fn a3_chain_in_d4_is_outer_branch_outer() {
        let d4 = RootSystem::parse("D4").unwrap();
        let emb = SubsystemEmbedding::named(&d4, NamedEmbedding::A3Standard).unwrap();
        assert_eq!(emb.simple_images(), vec![0, 1, 2]);
        assert_eq!(emb.sub().num_positive(), 6);
    }

    #[test]
    fn a3_chain_missing_in_b3() {
        let b3 = RootSystem::parse("B3").unwrap();
        assert!(SubsystemEmbedding::named(&b3, NamedEmbedding::A3Standard).is_err());
    }

    #[test]
    fn d5_in_e6_covers_bourbaki_nodes_one_through_five() {
        let e6 = RootSystem::parse("E6").unwrap();
        let emb = SubsystemEmbedding::named(&e6, NamedEmbedding::D5InE6).unwrap();
        let mut images = emb.simple_images();
        images.sort_unstable();
        assert_eq!(images, vec![0, 1, 2, 3, 4]);
        assert_eq!(emb.sub().num_positive(), 20);
    }

    #[test]
    fn drop_embeddings_shrink_by_one() {
        let d5 = RootSystem::parse("D5").unwrap();
        let emb = SubsystemEmbedding::named(&d5, NamedEmbedding::DlInDl1).unwrap();
        assert_eq!(emb.sub().kind(), SystemKind::D(4));
        assert_eq!(emb.simple_images(), vec![1, 2, 3, 4]);

        let e7 = RootSystem::parse("E7").unwrap();
        let emb = SubsystemEmbedding::named(&e7, NamedEmbedding::ElInEl1).unwrap();
        assert_eq!(emb.sub().kind(), SystemKind::E(6));
        assert_eq!(emb.simple_images(), vec![0, 1, 2, 3, 4, 5]);

        let e6 = RootSystem::parse("E6").unwrap();
        assert!(SubsystemEmbedding::named(&e6, NamedEmbedding::ElInEl1).is_err());
    }

    #[test]
    fn images_preserve_sums() {
        let f4 = RootSystem::parse("F4").unwrap();
        let emb = SubsystemEmbedding::named(&f4, NamedEmbedding::A2LongRoots).unwrap();
        let sub = emb.sub().clone();
        for a in 0..sub.num_roots() {
            for b in 0..sub.num_roots() {
                match sub.sum(a, b) {
                    Some(c) => {
                        assert_eq!(
                            f4.sum(emb.image(a), emb.image(b)),
                            Some(emb.image(c))
                        );
                    }
                    None => {
                        // a + b = 0 stays 0; otherwise the image sum may or
                        // may not be a root of the target, which is fine.
                    }
                }
            }
        }
    }
}
