use std::collections::{BTreeMap, HashMap, VecDeque};

use super::ImmersionError;
use crate::hypercore::Vertex;

/// Euler characteristic, orientability and the standard name of a closed
/// connected surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub euler: i64,
    pub orientable: bool,
    pub name: String,
}

pub fn surface_name(euler: i64, orientable: bool) -> String {
    if orientable {
        match (2 - euler) / 2 {
            0 => "sphere".into(),
            1 => "torus".into(),
            g => format!("genus-{g} surface"),
        }
    } else {
        match 2 - euler {
            1 => "projective plane".into(),
            2 => "Klein bottle".into(),
            c => format!("{c}-crosscap surface"),
        }
    }
}

fn pairs_of(t: &[Vertex; 3]) -> [(Vertex, Vertex); 3] {
    let p = |a: Vertex, b: Vertex| (a.min(b), a.max(b));
    [p(t[0], t[1]), p(t[0], t[2]), p(t[1], t[2])]
}

/// Link of every vertex as adjacency lists over the other two corners.
fn links(triangles: &[[Vertex; 3]]) -> BTreeMap<Vertex, BTreeMap<Vertex, Vec<Vertex>>> {
    let mut out: BTreeMap<Vertex, BTreeMap<Vertex, Vec<Vertex>>> = BTreeMap::new();
    for t in triangles {
        for i in 0..3 {
            let (v, a, b) = (t[i], t[(i + 1) % 3], t[(i + 2) % 3]);
            let l = out.entry(v).or_default();
            l.entry(a).or_default().push(b);
            l.entry(b).or_default().push(a);
        }
    }
    out
}

/// Connected components of a graph given as adjacency lists.
pub(crate) fn graph_components(adj: &BTreeMap<Vertex, Vec<Vertex>>) -> Vec<Vec<Vertex>> {
    let mut seen: HashMap<Vertex, ()> = HashMap::new();
    let mut comps = Vec::new();
    for &s in adj.keys() {
        if seen.insert(s, ()).is_some() {
            continue;
        }
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &y in &adj[&x] {
                if seen.insert(y, ()).is_none() {
                    comp.push(y);
                    stack.push(y);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Checks the closed-surface conditions (every pair in exactly two
/// triangles, every link one cycle, connected) and classifies.
/// Orientability: propagate an orientation across shared pairs; a
/// conflict means non-orientable.
pub fn classify_surface(triangles: &[[Vertex; 3]]) -> Result<Classification, ImmersionError> {
    let bad = |m: String| Err(ImmersionError::NotASurface(m));
    if triangles.is_empty() {
        return bad("no triangles".into());
    }
    let mut by_pair: HashMap<(Vertex, Vertex), Vec<usize>> = HashMap::new();
    for (i, t) in triangles.iter().enumerate() {
        if t[0] == t[1] || t[0] == t[2] || t[1] == t[2] {
            return bad(format!("triangle {i} repeats a vertex"));
        }
        for p in pairs_of(t) {
            by_pair.entry(p).or_default().push(i);
        }
    }
    if let Some((p, ts)) = by_pair.iter().find(|(_, ts)| ts.len() != 2) {
        return bad(format!("pair {p:?} lies in {} triangles", ts.len()));
    }
    let links = links(triangles);
    for (v, l) in &links {
        if l.values().any(|n| n.len() != 2) || graph_components(l).len() != 1 {
            return bad(format!("link of vertex {v} is not a single cycle"));
        }
    }
    // orientation: +1 keeps the listed cyclic order, -1 reverses it
    let directed = |t: &[Vertex; 3], s: i8| {
        let (a, b, c) = if s > 0 { (t[0], t[1], t[2]) } else { (t[0], t[2], t[1]) };
        [(a, b), (b, c), (c, a)]
    };
    let mut sign = vec![0i8; triangles.len()];
    let mut orientable = true;
    let mut queue = VecDeque::from([0usize]);
    sign[0] = 1;
    let mut reached = 1;
    while let Some(i) = queue.pop_front() {
        for (a, b) in directed(&triangles[i], sign[i]) {
            let j = by_pair[&(a.min(b), a.max(b))]
                .iter()
                .copied()
                .find(|&j| j != i)
                .unwrap();
            // the neighbour must traverse the shared pair as (b, a)
            let want = if directed(&triangles[j], 1).contains(&(b, a)) {
                1
            } else {
                -1
            };
            if sign[j] == 0 {
                sign[j] = want;
                reached += 1;
                queue.push_back(j);
            } else if sign[j] != want {
                orientable = false;
            }
        }
    }
    if reached != triangles.len() {
        return bad("not connected".into());
    }
    let euler = links.len() as i64 - by_pair.len() as i64 + triangles.len() as i64;
    Ok(Classification {
        euler,
        orientable,
        name: surface_name(euler, orientable),
    })
}

/// A connected piece of a [`SurfaceComplex`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceComponent {
    pub vertices: Vec<Vertex>,
    /// Indices into the complex's triangle list.
    pub triangles: Vec<usize>,
    pub classification: Classification,
}

/// A pure 2-complex each of whose components is a closed surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceComplex {
    pub n: usize,
    pub triangles: Vec<[Vertex; 3]>,
    pub components: Vec<SurfaceComponent>,
}

impl SurfaceComplex {
    /// Splits into components (ordered by smallest vertex) and classifies
    /// each.
    pub fn new(n: usize, triangles: Vec<[Vertex; 3]>) -> Result<Self, ImmersionError> {
        let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
        for t in &triangles {
            if t.iter().any(|&v| v >= n) {
                return Err(ImmersionError::NotASurface(format!("triangle {t:?} leaves [0, {n})")));
            }
            for (a, b) in pairs_of(t) {
                adj.entry(a).or_default().push(b);
                adj.entry(b).or_default().push(a);
            }
        }
        let mut comp_of = vec![usize::MAX; n];
        let comps = graph_components(&adj);
        for (c, vs) in comps.iter().enumerate() {
            for &v in vs {
                comp_of[v] = c;
            }
        }
        let mut components = Vec::with_capacity(comps.len());
        for (c, vertices) in comps.into_iter().enumerate() {
            let idx: Vec<usize> = (0..triangles.len())
                .filter(|&i| comp_of[triangles[i][0]] == c)
                .collect();
            let tris: Vec<[Vertex; 3]> = idx.iter().map(|&i| triangles[i]).collect();
            components.push(SurfaceComponent {
                vertices,
                triangles: idx,
                classification: classify_surface(&tris)?,
            });
        }
        Ok(SurfaceComplex {
            n,
            triangles,
            components,
        })
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.components.iter().map(|c| c.classification.euler).sum()
    }

    /// Distinct vertex pairs inside triangles.
    pub fn one_faces(&self) -> usize {
        let mut ps: Vec<_> = self.triangles.iter().flat_map(pairs_of).collect();
        ps.sort_unstable();
        ps.dedup();
        ps.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::{fixtures, Hypergraph};

    fn tris(h: &Hypergraph) -> Vec<[Vertex; 3]> {
        h.edges().iter().map(|e| [e[0], e[1], e[2]]).collect()
    }

    #[test]
    fn fixtures_classify() {
        let cases = [
            (fixtures::tetrahedron(), 2, true, "sphere"),
            (fixtures::octahedron(), 2, true, "sphere"),
            (fixtures::torus7(), 0, true, "torus"),
            (fixtures::projective_plane6(), 1, false, "projective plane"),
        ];
        for (h, chi, orientable, name) in cases {
            let c = classify_surface(&tris(&h)).unwrap();
            assert_eq!((c.euler, c.orientable, c.name.as_str()), (chi, orientable, name));
        }
    }

    #[test]
    fn pinched_is_not_a_surface() {
        assert!(matches!(
            classify_surface(&tris(&fixtures::glued_tetrahedra())),
            Err(ImmersionError::NotASurface(_))
        ));
        let open = [[0, 1, 2]];
        assert!(classify_surface(&open).is_err());
    }

    #[test]
    fn names() {
        assert_eq!(surface_name(-2, true), "genus-2 surface");
        assert_eq!(surface_name(0, false), "Klein bottle");
        assert_eq!(surface_name(-1, false), "3-crosscap surface");
    }

    #[test]
    fn complex_counts() {
        let s = SurfaceComplex::new(6, tris(&fixtures::octahedron())).unwrap();
        assert_eq!(s.components.len(), 1);
        assert_eq!(2 * s.one_faces(), 3 * s.triangles.len());
    }
}
