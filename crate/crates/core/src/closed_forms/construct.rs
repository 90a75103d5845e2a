use super::{family_formula, half_split};
use crate::decomposition::{
    find_certificate, ktds_from_certificate, CertificateKind, HLCertificate, TwoFactor, DECOMPOSITION_CAP,
};
use crate::domination::{check_k, is_ktds};
use crate::error::{Error, Result};
use crate::graph::{norm, Edge, Family, Matching};
use crate::inflation::{inflate, InflatedGraph};
use crate::vertex_set::VertexSet;

/// An explicit kTDS of the family's inflation whose size is the family's
/// closed form. The set is checked with [`is_ktds`] before it is returned.
pub fn construct_family_ktds(family: &Family, k: usize) -> Result<VertexSet> {
    let g = family.build()?;
    check_k(&g, k)?;
    let target = family_formula(family, k)?.value;
    let gi = inflate(&g)?;
    let set = match family {
        Family::Complete { n } => circulant(&gi, *n, k, None)?,
        Family::Harary { m, n } => circulant(&gi, *n, k, Some(*m))?,
        Family::Petersen { n, .. } => petersen(&gi, *n)?,
        Family::Bipartite { p, q } => bipartite(&gi, *p, *q, k)?,
        Family::Multipartite { sizes } => multipartite(&gi, sizes, k)?,
        Family::Cycle { .. } => (0..gi.order()).collect(),
    };
    assert!(is_ktds(gi.graph(), &set, k)?, "family construction must dominate");
    assert_eq!(set.len(), target, "family construction must meet its closed form");
    Ok(set)
}

/// Edges `{j, j + i}` of the circulant on `0..n`; a 2-factor when `2i != n`.
fn offset_class(n: usize, i: usize) -> Vec<Edge> {
    (0..n).map(|j| norm(j, (j + i) % n)).collect()
}

/// Alternate edges along each cycle; `None` if a cycle has odd length
/// (except that a single odd cycle is allowed when `near` is set).
fn alternate_edges(factor: &TwoFactor, near: bool) -> Option<(Vec<Edge>, Option<usize>)> {
    let odd: Vec<&Vec<usize>> = factor.cycles().iter().filter(|c| c.len() % 2 == 1).collect();
    if odd.len() > usize::from(near) {
        return None;
    }
    let mut edges = Vec::new();
    let mut missed = None;
    for cycle in factor.cycles() {
        for pair in cycle.chunks(2) {
            match pair {
                [a, b] => edges.push(norm(*a, *b)),
                [a] => missed = Some(*a),
                _ => unreachable!(),
            }
        }
    }
    Some((edges, missed))
}

/// Complete graphs (`harary = None`) and Harary graphs `H_{m,n}`: circulant
/// offset classes `1..=k/2` as 2-factors, and for odd `k` a matching from
/// the next unused offset class, the diameters, or the extra chords of the
/// odd-odd Harary graph.
fn circulant(gi: &InflatedGraph, n: usize, k: usize, harary: Option<usize>) -> Result<VertexSet> {
    let g = gi.base();
    let r = k / 2;
    let factors: Vec<TwoFactor> =
        (1..=r).map(|i| TwoFactor::from_edges(g, &offset_class(n, i))).collect::<Result<_>>()?;
    if k.is_multiple_of(2) {
        return certificate_set(gi, CertificateKind::Hld, factors, None, k);
    }

    let m = harary.unwrap_or(n - 1);
    let (edges, missed) = if n.is_multiple_of(2) && m % 2 == 1 {
        ((0..n / 2).map(|i| (i, i + n / 2)).collect(), None)
    } else if n % 2 == 1 && m % 2 == 1 && harary.is_some() {
        let h = (n - 1) / 2;
        ((0..h).map(|i| (i, i + h)).collect(), Some(n - 1))
    } else {
        // the next offset class is unused by the factors and lies in the graph
        let next = if harary.is_none() && n % 2 == 1 { (n - 1) / 2 } else { r + 1 };
        let class = TwoFactor::from_edges(g, &offset_class(n, next))?;
        match alternate_edges(&class, n % 2 == 1) {
            Some(found) => found,
            None => return searched(gi, k),
        }
    };
    let kind = if missed.is_some() { CertificateKind::Hlmm } else { CertificateKind::Hlpm };
    let matching = Matching::new(g, &edges)?;
    let cert = HLCertificate { kind, factors, matching: Some(matching), unsaturated: missed, host: g.clone() };
    ktds_from_certificate(gi, &cert, k)
}

/// Exhaustive certificate search for instances the offset classes miss.
fn searched(gi: &InflatedGraph, k: usize) -> Result<VertexSet> {
    let g = gi.base();
    let unsupported = || {
        Error::Unsupported(format!("no certificate found for this instance; use solve (n = {}, k = {k})", g.order()))
    };
    if g.order() > DECOMPOSITION_CAP {
        return Err(unsupported());
    }
    match find_certificate(g, k)? {
        Some(cert) => ktds_from_certificate(gi, &cert, k),
        None => Err(unsupported()),
    }
}

fn certificate_set(
    gi: &InflatedGraph,
    kind: CertificateKind,
    factors: Vec<TwoFactor>,
    matching: Option<Matching>,
    k: usize,
) -> Result<VertexSet> {
    let cert = HLCertificate { kind, factors, matching, unsaturated: None, host: gi.base().clone() };
    ktds_from_certificate(gi, &cert, k)
}

/// `P(n, m)` with `k = 2`. Outer plus inner cycles when `2m != n`; for
/// `2m = n` the 8-cycles `a_i a_{i+1} b_{i+1} b_{i+1+m} a_{i+1+m} a_{i+m}
/// b_{i+m} b_i` for even `i`, and when `m` is odd the four vertices
/// `a_{m-1}, b_{m-1}, a_{n-1}, b_{n-1}` left over keep their whole cliques.
fn petersen(gi: &InflatedGraph, n: usize) -> Result<VertexSet> {
    let g = gi.base();
    let m = (0..n).find(|&j| g.has_edge(n, n + j) && j > 0).expect("inner edge at b_0");
    let (a, b) = (|i: usize| i % n, |i: usize| n + i % n);
    if 2 * m != n {
        let mut edges: Vec<Edge> = (0..n).map(|i| norm(a(i), a(i + 1))).collect();
        edges.extend((0..n).map(|i| norm(b(i), b(i + m))));
        let factor = TwoFactor::from_edges(g, &edges)?;
        return certificate_set(gi, CertificateKind::Hld, vec![factor], None, 2);
    }

    let mut set = VertexSet::new();
    let mut covered = vec![false; 2 * n];
    for i in (0..m.saturating_sub(1)).step_by(2) {
        let cycle = [a(i), a(i + 1), b(i + 1), b(i + 1 + m), a(i + 1 + m), a(i + m), b(i + m), b(i)];
        for (j, &v) in cycle.iter().enumerate() {
            covered[v] = true;
            set.insert(gi.idx(v, cycle[(j + 7) % 8]));
            set.insert(gi.idx(v, cycle[(j + 1) % 8]));
        }
    }
    for v in (0..2 * n).filter(|&v| !covered[v]) {
        for x in gi.clique_range(v) {
            set.insert(x);
        }
    }
    Ok(set)
}

/// Picks towards the partners under the perfect matchings
/// `M_j = {(xs[i], ys[(i + j) mod p])}`, `j < k`, on both sides.
fn factorization_picks(gi: &InflatedGraph, xs: &[usize], ys: &[usize], k: usize, set: &mut VertexSet) {
    let p = xs.len();
    for (i, &x) in xs.iter().enumerate() {
        for j in 0..k {
            let y = ys[(i + j) % p];
            set.insert(gi.idx(x, y));
            set.insert(gi.idx(y, x));
        }
    }
}

/// `K_{p,q}`, sides `0..p` and `p..p+q`. For `p = q` the 1-factorization
/// `M_j` gives the certificate: `M_0` is the matching when `k` is odd and
/// the remaining matchings pair up into 2-factors. For `p < q` the first
/// `p` vertices of the large side carry that construction and every other
/// vertex keeps `k + 1` members of its clique.
fn bipartite(gi: &InflatedGraph, p: usize, q: usize, k: usize) -> Result<VertexSet> {
    let g = gi.base();
    if p == q {
        let mj = |j: usize| -> Vec<Edge> { (0..p).map(|i| (i, p + (i + j) % p)).collect() };
        let first = k % 2;
        let factors: Vec<TwoFactor> = (0..k / 2)
            .map(|t| {
                let mut edges = mj(first + 2 * t);
                edges.extend(mj(first + 2 * t + 1));
                TwoFactor::from_edges(g, &edges)
            })
            .collect::<Result<_>>()?;
        if k.is_multiple_of(2) {
            return certificate_set(gi, CertificateKind::Hld, factors, None, k);
        }
        let matching = Matching::new(g, &mj(0))?;
        return certificate_set(gi, CertificateKind::Hlpm, factors, Some(matching), k);
    }
    if k >= p.min(q) {
        return Err(Error::Unsupported(format!(
            "no construction for K_{{{p},{q}}} with k = {k} >= {}; use solve",
            p.min(q)
        )));
    }
    let (first, second): (Vec<usize>, Vec<usize>) = ((0..p).collect(), (p..p + q).collect());
    let (xs, ys) = if p < q { (first, second) } else { (second, first) };
    Ok(split_construction(gi, &xs, &ys, k))
}

/// `xs` is completely joined to `ys` and `|xs| <= |ys|`: the balanced part
/// uses [`factorization_picks`], the rest of `ys` keeps `k + 1` per clique.
fn split_construction(gi: &InflatedGraph, xs: &[usize], ys: &[usize], k: usize) -> VertexSet {
    let mut set = VertexSet::new();
    let (paired, extra) = ys.split_at(xs.len());
    factorization_picks(gi, xs, paired, k, &mut set);
    for &y in extra {
        for x in gi.clique_range(y).take(k + 1) {
            set.insert(x);
        }
    }
    set
}

fn multipartite(gi: &InflatedGraph, sizes: &[usize], k: usize) -> Result<VertexSet> {
    let (_, chosen) = half_split(sizes);
    let mut starts = Vec::with_capacity(sizes.len());
    let mut acc = 0;
    for &s in sizes {
        starts.push(acc);
        acc += s;
    }
    let mut in_j = vec![false; acc];
    for &part in &chosen {
        in_j[starts[part]..starts[part] + sizes[part]].fill(true);
    }
    let xs: Vec<usize> = (0..acc).filter(|&v| in_j[v]).collect();
    let ys: Vec<usize> = (0..acc).filter(|&v| !in_j[v]).collect();
    Ok(split_construction(gi, &xs, &ys, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::{gamma_complete, gamma_harary};

    fn build(shorthand: &str, k: usize) -> usize {
        construct_family_ktds(&shorthand.parse().unwrap(), k).unwrap().len()
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(build("kn:5", 3), 16);
        for n in 3..9 {
            for k in 2..n {
                assert_eq!(build(&format!("kn:{n}"), k), gamma_complete(n, k).unwrap(), "K_{n}, k = {k}");
            }
        }
    }

    #[test]
    fn harary_graphs() {
        for n in 4..10 {
            for m in 2..n {
                for k in 2..=m {
                    let size = build(&format!("harary:{m},{n}"), k);
                    assert_eq!(size, gamma_harary(m, n, k).unwrap(), "H_{m},{n}, k = {k}");
                }
            }
        }
    }

    #[test]
    fn petersen_graphs() {
        assert_eq!(build("gpg:5,2", 2), 20);
        assert_eq!(build("gpg:6,3", 2), 26);
        assert_eq!(build("gpg:8,4", 2), 32);
        assert_eq!(build("gpg:10,5", 2), 42);
        assert_eq!(build("gpg:7,3", 2), 28);
        assert!(matches!(construct_family_ktds(&"gpg:5,2".parse().unwrap(), 3), Err(Error::Unsupported(_))));
    }

    #[test]
    fn bipartite_graphs() {
        assert_eq!(build("kpq:3,3", 2), 12);
        assert_eq!(build("kpq:3,5", 2), 18);
        assert_eq!(build("kpq:4,4", 3), 24);
        assert_eq!(build("kpq:5,5", 5), 50);
        assert_eq!(build("kpq:4,6", 3), 2 * 4 * 3 + 2 * 4);
        assert_eq!(build("kpq:6,4", 3), 2 * 4 * 3 + 2 * 4);
        assert!(matches!(construct_family_ktds(&"kpq:2,3".parse().unwrap(), 2), Err(Error::Unsupported(_))));
    }

    #[test]
    fn multipartite_graphs() {
        assert_eq!(build("multi:2,2,3", 2), 15);
        assert_eq!(build("multi:1,1,1,1", 2), 8);
        assert_eq!(build("multi:3,5", 2), 18);
        assert_eq!(build("multi:2,3,4,1", 3), 10 * 4 - 10);
    }

    #[test]
    fn cycles() {
        assert_eq!(build("cycle:7", 2), 14);
    }
}
