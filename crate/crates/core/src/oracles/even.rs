use crate::hypercore::{EvenCertificate, Hypergraph};

type Bits = Vec<u64>;

fn bits(len: usize) -> Bits {
    vec![0; len.div_ceil(64)]
}

fn set(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

fn xor(a: &mut Bits, b: &Bits) {
    for (x, y) in a.iter_mut().zip(b) {
        *x ^= y;
    }
}

fn first_one(b: &Bits) -> Option<usize> {
    b.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

fn popcount(b: &Bits) -> u32 {
    b.iter().map(|w| w.count_ones()).sum()
}

fn ones(b: &Bits) -> Vec<usize> {
    let mut out = Vec::new();
    for (i, &w) in b.iter().enumerate() {
        let mut w = w;
        while w != 0 {
            out.push(i * 64 + w.trailing_zeros() as usize);
            w &= w - 1;
        }
    }
    out
}

/// A nonempty set of edges covering every vertex an even number of times,
/// or `None` when the incidence columns are independent over GF(2).
///
/// Columns are reduced one at a time against pivot columns (pivot = lowest
/// set bit), tracking which original columns were combined. Each column
/// that reduces to zero yields a kernel vector. The witness starts from the
/// sparsest kernel vector and greedily xors in others while that shrinks
/// its support: small, not necessarily minimum.
pub fn find_even_subhypergraph(h: &Hypergraph) -> Option<EvenCertificate> {
    let (n, m) = (h.n(), h.m());
    let mut pivot_of: Vec<Option<usize>> = vec![None; n];
    let mut reduced: Vec<(Bits, Bits)> = Vec::new();
    let mut kernel: Vec<Bits> = Vec::new();

    for (j, e) in h.edges().iter().enumerate() {
        let mut col = bits(n);
        for &v in e {
            set(&mut col, v);
        }
        let mut combo = bits(m);
        set(&mut combo, j);
        while let Some(p) = first_one(&col) {
            match pivot_of[p] {
                Some(r) => {
                    let (c, k) = &reduced[r];
                    xor(&mut col, c);
                    xor(&mut combo, k);
                }
                None => break,
            }
        }
        match first_one(&col) {
            Some(p) => {
                pivot_of[p] = Some(reduced.len());
                reduced.push((col, combo));
            }
            None => kernel.push(combo),
        }
    }

    let start = (0..kernel.len()).min_by_key(|&i| (popcount(&kernel[i]), i))?;
    let mut best = kernel[start].clone();
    loop {
        let mut improved = false;
        for k in &kernel {
            let mut cand = best.clone();
            xor(&mut cand, k);
            let c = popcount(&cand);
            if c > 0 && c < popcount(&best) {
                best = cand;
                improved = true;
            }
        }
        if !improved {
            break;
        }
    }
    Some(EvenCertificate::new(ones(&best)))
}

/// Direct check that the selected incidence columns sum to zero mod 2.
pub fn incidence_sum_is_zero(h: &Hypergraph, edges: &[usize]) -> bool {
    let mut parity = vec![false; h.n()];
    for &i in edges {
        for &v in h.edge(i) {
            parity[v] ^= true;
        }
    }
    parity.iter().all(|p| !p)
}
