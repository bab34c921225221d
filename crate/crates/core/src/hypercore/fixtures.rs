//! Small named complexes and configurations used across tests, benches and
//! the CLI.

use super::hypergraph::{Hypergraph, LinearHypergraph};

/// The Pasch configuration: 6 points, 4 triples, every point on 2 triples.
pub fn pasch() -> LinearHypergraph {
    LinearHypergraph::new(3, 6, vec![vec![0, 1, 2], vec![0, 3, 4], vec![1, 3, 5], vec![2, 4, 5]])
        .expect("Pasch is linear")
}

/// The Fano plane with lines listed so that point 0 lies on lines 0..3.
pub fn fano() -> LinearHypergraph {
    LinearHypergraph::new(
        3,
        7,
        vec![
            vec![0, 1, 2],
            vec![0, 3, 4],
            vec![0, 5, 6],
            vec![1, 3, 5],
            vec![1, 4, 6],
            vec![2, 3, 6],
            vec![2, 4, 5],
        ],
    )
    .expect("Fano is linear")
}

/// Boundary of the tetrahedron on {0,1,2,3}.
pub fn tetrahedron() -> Hypergraph {
    Hypergraph::new(3, 4, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]).expect("valid complex")
}

/// Two tetrahedron boundaries glued at vertex 0: {0,1,2,3} and {0,4,5,6}.
pub fn glued_tetrahedra() -> Hypergraph {
    Hypergraph::new(
        3,
        7,
        vec![
            vec![0, 1, 2],
            vec![0, 1, 3],
            vec![0, 2, 3],
            vec![1, 2, 3],
            vec![0, 4, 5],
            vec![0, 4, 6],
            vec![0, 5, 6],
            vec![4, 5, 6],
        ],
    )
    .expect("valid complex")
}

/// Boundary of the octahedron; antipodal pairs are (0,1), (2,3), (4,5).
pub fn octahedron() -> Hypergraph {
    let mut faces = Vec::new();
    for a in [0, 1] {
        for b in [2, 3] {
            for c in [4, 5] {
                faces.push(vec![a, b, c]);
            }
        }
    }
    Hypergraph::new(3, 6, faces).expect("valid complex")
}

/// The 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
pub fn torus7() -> Hypergraph {
    let mut faces = Vec::new();
    for i in 0..7 {
        faces.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        faces.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    Hypergraph::new(3, 7, faces).expect("valid complex")
}

/// The 6-vertex projective plane (hemi-icosahedron), 10 triangles.
pub fn projective_plane6() -> Hypergraph {
    let faces = [
        [1, 2, 3],
        [1, 3, 4],
        [1, 4, 5],
        [1, 5, 6],
        [1, 6, 2],
        [2, 3, 5],
        [3, 4, 6],
        [4, 5, 2],
        [5, 6, 3],
        [6, 2, 4],
    ];
    Hypergraph::new(3, 6, faces.iter().map(|f| f.iter().map(|v| v - 1).collect()).collect()).expect("valid complex")
}
