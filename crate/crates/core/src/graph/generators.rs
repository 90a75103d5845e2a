use super::{Edge, Graph};
use crate::error::{input, Result};

pub fn complete_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return input("complete graph needs at least one vertex");
    }
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    Graph::from_edges(n, &pairs)
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return input(format!("cycle needs at least 3 vertices, got {n}"));
    }
    let pairs: Vec<Edge> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &pairs)
}

/// Complete multipartite graph; part `i` occupies a contiguous id block in
/// the order given.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    if sizes.len() < 2 {
        return input("complete multipartite graph needs at least 2 parts");
    }
    if sizes.contains(&0) {
        return input("every part must be non-empty");
    }
    let n: usize = sizes.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &pairs)
}

/// `K_{p,q}`: ids `0..p` on one side, `p..p+q` on the other.
pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    complete_multipartite(&[p, q])
}

/// Harary graph `H_{m,n}` on vertices arranged around a circle.
///
/// With `m` even every vertex sees its `m/2` nearest vertices on each side.
/// With `m` odd and `n` even the diameters are added to `H_{m-1,n}`. With
/// both odd, `H_{m-1,n}` gains the edges `(i, i + (n-1)/2)` for
/// `0 <= i <= (n-1)/2`; the last of these repeats vertex `(n-1)/2` so one
/// vertex ends up with degree `m + 1`.
pub fn harary_graph(m: usize, n: usize) -> Result<Graph> {
    if m < 2 || m >= n {
        return input(format!("Harary graph needs 2 <= m < n, got m={m}, n={n}"));
    }
    let mut pairs: Vec<Edge> = Vec::new();
    for i in 0..n {
        for off in 1..=m / 2 {
            pairs.push((i, (i + off) % n));
        }
    }
    if m % 2 == 1 {
        if n.is_multiple_of(2) {
            for i in 0..n / 2 {
                pairs.push((i, i + n / 2));
            }
        } else {
            let half = (n - 1) / 2;
            for i in 0..=half {
                pairs.push((i, (i + half) % n));
            }
        }
    }
    Graph::from_edges(n, &pairs)
}

/// Generalized Petersen graph `P(n, m)`: outer vertices `a_i = i`, inner
/// vertices `b_i = n + i`. The offset is normalized to `min(m, n - m)`.
pub fn petersen_graph(n: usize, m: usize) -> Result<Graph> {
    if n < 3 {
        return input(format!("generalized Petersen graph needs n >= 3, got {n}"));
    }
    let m = normalize_petersen_offset(n, m)?;
    let mut pairs = Vec::with_capacity(3 * n);
    for i in 0..n {
        pairs.push((i, (i + 1) % n));
        pairs.push((i, n + i));
        pairs.push((n + i, n + (i + m) % n));
    }
    Graph::from_edges(2 * n, &pairs)
}

pub(crate) fn normalize_petersen_offset(n: usize, m: usize) -> Result<usize> {
    let r = m % n;
    if r == 0 {
        return input(format!("Petersen offset {m} is 0 mod {n}"));
    }
    Ok(r.min(n - r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn handshake(g: &Graph) {
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
    }

    #[test]
    fn complete_sizes() {
        let k4 = complete_graph(4).unwrap();
        assert_eq!(k4.size(), 6);
        assert!(k4.degrees().iter().all(|&d| d == 3));
        let k5 = complete_graph(5).unwrap();
        assert_eq!(k5.size(), 10);
        assert!(k5.degrees().iter().all(|&d| d == 4));
        assert_eq!(complete_graph(1).unwrap().size(), 0);
        assert!(complete_graph(0).is_err());
    }

    #[test]
    fn multipartite() {
        let g = complete_multipartite(&[2, 3]).unwrap();
        assert_eq!(g.size(), 6);
        assert_eq!(g.degrees(), vec![3, 3, 2, 2, 2]);
        let g = complete_multipartite(&[2, 2, 3]).unwrap();
        assert_eq!((g.order(), g.size()), (7, 16));
        let g = complete_multipartite(&[1, 1]).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
        assert!(complete_multipartite(&[4]).is_err());
    }

    #[test]
    fn harary_cases() {
        let h = harary_graph(4, 5).unwrap();
        assert_eq!(h, complete_graph(5).unwrap());

        let h = harary_graph(3, 6).unwrap();
        assert_eq!(h.size(), 9);
        assert!(h.degrees().iter().all(|&d| d == 3));
        for i in 0..6 {
            assert!(h.has_edge(i, (i + 1) % 6));
            assert!(h.has_edge(i, (i + 3) % 6));
        }

        let h = harary_graph(3, 5).unwrap();
        assert_eq!(h.size(), 8);
        assert_eq!(h.degrees(), vec![3, 3, 4, 3, 3]);
        handshake(&h);

        assert!(harary_graph(5, 5).is_err());
        assert!(harary_graph(1, 5).is_err());
    }

    #[test]
    fn harary_regular_when_not_both_odd() {
        for n in 3..14 {
            for m in 2..n {
                let h = harary_graph(m, n).unwrap();
                handshake(&h);
                if m % 2 == 0 || n % 2 == 0 {
                    assert!(h.degrees().iter().all(|&d| d == m), "H_{m},{n}");
                }
            }
        }
    }

    #[test]
    fn petersen_cases() {
        let p = petersen_graph(5, 2).unwrap();
        assert_eq!((p.order(), p.size()), (10, 15));
        assert!(p.degrees().iter().all(|&d| d == 3));

        let p = petersen_graph(6, 3).unwrap();
        assert_eq!(p.size(), 15);
        assert!((0..6).all(|i| p.degree(i) == 3));
        assert!((6..12).all(|i| p.degree(i) == 2));

        assert_eq!(petersen_graph(8, 4).unwrap().size(), 20);
        assert_eq!(petersen_graph(7, 5).unwrap(), petersen_graph(7, 2).unwrap());
        assert!(petersen_graph(5, 5).is_err());
        assert!(petersen_graph(2, 1).is_err());
    }

    #[test]
    fn petersen_degree_profile() {
        for n in 3..12 {
            for m in 1..=n / 2 {
                let p = petersen_graph(n, m).unwrap();
                handshake(&p);
                let twos = p.degrees().iter().filter(|&&d| d == 2).count();
                if 2 * m == n {
                    assert_eq!(twos, n);
                } else {
                    assert_eq!(twos, 0);
                    assert_eq!(p.size(), 3 * n);
                }
            }
        }
    }
}
