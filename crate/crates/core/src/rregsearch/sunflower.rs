use std::collections::BTreeSet;

/// `petals` are members of the input family; any two of them intersect in
/// exactly `core`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sunflower {
    pub petals: Vec<Vec<usize>>,
    pub core: Vec<usize>,
}

impl Sunflower {
    pub fn is_valid(&self) -> bool {
        let core: BTreeSet<usize> = self.core.iter().copied().collect();
        let sets: Vec<BTreeSet<usize>> = self.petals.iter().map(|p| p.iter().copied().collect()).collect();
        sets.iter().enumerate().all(|(i, a)| {
            sets[i + 1..]
                .iter()
                .all(|b| a != b && a.intersection(b).copied().collect::<BTreeSet<_>>() == core)
        })
    }
}

fn disjoint_greedy(family: &[Vec<usize>], r: usize) -> Option<Vec<usize>> {
    let mut taken = BTreeSet::new();
    let mut picked = Vec::new();
    for (i, s) in family.iter().enumerate() {
        if s.iter().all(|x| !taken.contains(x)) {
            taken.extend(s.iter().copied());
            picked.push(i);
            if picked.len() == r {
                return Some(picked);
            }
        }
    }
    None
}

/// Greedy `r` pairwise disjoint members if they exist; otherwise recurse
/// into the link of the most frequent element (lowest on ties), which
/// joins the core. Duplicate members are ignored.
pub fn find_sunflower(family: &[Vec<usize>], r: usize) -> Option<Sunflower> {
    assert!(r >= 2, "a sunflower needs r >= 2");
    let mut fam: Vec<Vec<usize>> = family
        .iter()
        .map(|s| {
            let mut s = s.clone();
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect();
    fam.sort();
    fam.dedup();
    let mut core = Vec::new();
    loop {
        if fam.len() < r {
            return None;
        }
        if let Some(idx) = disjoint_greedy(&fam, r) {
            let petals = idx
                .into_iter()
                .map(|i| {
                    let mut p = fam[i].clone();
                    p.extend(&core);
                    p.sort_unstable();
                    p
                })
                .collect();
            core.sort_unstable();
            let sf = Sunflower { petals, core };
            debug_assert!(sf.is_valid());
            return Some(sf);
        }
        let mut counts = std::collections::BTreeMap::new();
        for s in &fam {
            for &x in s {
                *counts.entry(x).or_insert(0usize) += 1;
            }
        }
        let (&x, _) = counts.iter().rev().max_by_key(|&(_, c)| *c)?;
        fam = fam
            .into_iter()
            .filter(|s| s.contains(&x))
            .map(|s| s.into_iter().filter(|&y| y != x).collect())
            .collect();
        core.push(x);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeedStream;
    use rand::seq::index::sample;

    #[test]
    fn disjoint_family() {
        let sf = find_sunflower(&[vec![1, 2], vec![3, 4], vec![5, 6]], 3).unwrap();
        assert!(sf.core.is_empty());
        assert_eq!(sf.petals.len(), 3);
    }

    #[test]
    fn common_element() {
        let sf = find_sunflower(&[vec![1, 2], vec![1, 3], vec![1, 4]], 3).unwrap();
        assert_eq!(sf.core, vec![1]);
        assert_eq!(sf.petals, vec![vec![1, 2], vec![1, 3], vec![1, 4]]);
    }

    #[test]
    fn too_small() {
        assert_eq!(find_sunflower(&[vec![1, 2], vec![1, 2]], 2), None);
    }

    fn brute_has_sunflower(fam: &[Vec<usize>], r: usize) -> bool {
        // r = 3 only
        assert_eq!(r, 3);
        let n = fam.len();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let sf = Sunflower {
                        petals: vec![fam[a].clone(), fam[b].clone(), fam[c].clone()],
                        core: fam[a].iter().copied().filter(|x| fam[b].contains(x)).collect(),
                    };
                    if sf.is_valid() {
                        return true;
                    }
                }
            }
        }
        false
    }

    #[test]
    fn random_families() {
        let mut rng = SeedStream::new(5).rng();
        for size in [200, 8, 6] {
            for _ in 0..20 {
                let mut fam: Vec<Vec<usize>> = (0..size)
                    .map(|_| {
                        let mut s = sample(&mut rng, 15, 3).into_vec();
                        s.sort_unstable();
                        s
                    })
                    .collect();
                fam.sort();
                fam.dedup();
                match find_sunflower(&fam, 3) {
                    Some(sf) => {
                        assert!(sf.is_valid());
                        assert!(sf.petals.iter().all(|p| fam.contains(p)));
                    }
                    // above 2^3 3! sets the recursion cannot fail
                    None => assert!(fam.len() <= 48),
                }
                if !brute_has_sunflower(&fam, 3) {
                    assert_eq!(find_sunflower(&fam, 3), None);
                }
            }
        }
    }
}
