//! Constructors for the vertex-transitive families and graph operations.

use super::{check_cap, Graph, Label, ProductLabel};
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Largest group order accepted by [`cayley_graph`]; the table check is cubic.
pub const CAYLEY_TABLE_CAP: usize = 512;

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return acc;
        }
    }
    acc
}

/// All `r`-subsets of `{1..=n}` in colexicographic order.
fn colex_subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for largest in r..=n {
        for mut s in colex_subsets(largest - 1, r - 1) {
            s.push(largest);
            out.push(s);
        }
    }
    out
}

fn sorted_intersection_len(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

fn rows_from_predicate(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Vec<BitSet> {
    let mut rows = vec![BitSet::new(n); n];
    for u in 0..n {
        for v in (u + 1)..n {
            if adjacent(u, v) {
                rows[u].insert(v);
                rows[v].insert(u);
            }
        }
    }
    rows
}

/// `K(t, r, n)`: `r`-subsets of `[n]`, adjacent when they share fewer than
/// `t` elements. `K(1, r, n)` is the Kneser graph.
pub fn kneser_graph(t: usize, r: usize, n: usize) -> Result<Graph> {
    if t < 1 || t > r || r > n {
        return Err(Error::argument(format!(
            "kneser({t},{r},{n}) needs 1 <= t <= r <= n"
        )));
    }
    check_cap(binomial(n, r), &format!("kneser({t},{r},{n})"))?;
    let subsets = colex_subsets(n, r);
    let rows = rows_from_predicate(subsets.len(), |u, v| {
        sorted_intersection_len(&subsets[u], &subsets[v]) < t
    });
    let labels = subsets.into_iter().map(Label::Subset).collect();
    Ok(Graph::from_rows(rows, Some(labels)).certify(true))
}

/// `Circ(r, n)` on `Z_n`: `i ~ j` iff `|i - j|` lies in `{r, ..., n - r}`.
/// The difference set is closed under `d -> n - d`, so the plain integer
/// difference agrees with the cyclic distance.
pub fn circular_graph(r: usize, n: usize) -> Result<Graph> {
    if r < 1 || n < 2 * r {
        return Err(Error::argument(format!(
            "circ({r},{n}) needs r >= 1 and n >= 2r"
        )));
    }
    check_cap(n as u128, &format!("circ({r},{n})"))?;
    let rows = rows_from_predicate(n, |u, v| {
        let d = v - u;
        d >= r && d <= n - r
    });
    let labels = (0..n).map(Label::Ring).collect();
    Ok(Graph::from_rows(rows, Some(labels)).certify(true))
}

/// Permutations of `[n]` in lexicographic one-line order, adjacent when
/// they agree on no point.
pub fn permutation_graph(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::argument(format!("perm({n}) needs n >= 2")));
    }
    let count = (1..=n as u128).try_fold(1u128, |acc, k| {
        let next = acc * k;
        (next <= u64::MAX as u128).then_some(next)
    });
    check_cap(count.unwrap_or(u128::MAX), &format!("perm({n})"))?;
    let perms = lex_permutations(n);
    let rows = rows_from_predicate(perms.len(), |u, v| {
        perms[u].iter().zip(&perms[v]).all(|(a, b)| a != b)
    });
    let labels = perms.into_iter().map(Label::Permutation).collect();
    Ok(Graph::from_rows(rows, Some(labels)).certify(true))
}

fn lex_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (1..=n).collect();
    let mut out = vec![current.clone()];
    // Narayana's next-permutation step.
    loop {
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| current[i] < current[i + 1])
        else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
        out.push(current.clone());
    }
}

/// Cayley graph of a finite group given by its multiplication table:
/// `g ~ h` iff `g * h^-1` is in `connection`.
pub fn cayley_graph(table: &[Vec<usize>], connection: &[usize]) -> Result<Graph> {
    let order = table.len();
    if order == 0 {
        return Err(Error::argument("empty multiplication table"));
    }
    if order > CAYLEY_TABLE_CAP {
        return Err(Error::resource(format!(
            "group of order {order} exceeds the table-check cap of {CAYLEY_TABLE_CAP}"
        )));
    }
    if table
        .iter()
        .any(|row| row.len() != order || row.iter().any(|&x| x >= order))
    {
        return Err(Error::argument(
            "multiplication table is not a closed square table",
        ));
    }
    let identity = (0..order)
        .find(|&e| (0..order).all(|g| table[e][g] == g && table[g][e] == g))
        .ok_or_else(|| Error::argument("multiplication table has no identity"))?;
    let mut inverse = vec![0; order];
    for g in 0..order {
        inverse[g] = (0..order)
            .find(|&h| table[g][h] == identity && table[h][g] == identity)
            .ok_or_else(|| Error::argument(format!("element {g} has no inverse")))?;
    }
    for a in 0..order {
        for b in 0..order {
            let ab = table[a][b];
            for c in 0..order {
                if table[ab][c] != table[a][table[b][c]] {
                    return Err(Error::argument(format!(
                        "multiplication is not associative at ({a},{b},{c})"
                    )));
                }
            }
        }
    }
    let mut in_connection = vec![false; order];
    for &s in connection {
        if s >= order {
            return Err(Error::argument(format!(
                "connection element {s} out of range"
            )));
        }
        in_connection[s] = true;
    }
    if in_connection[identity] {
        return Err(Error::argument("connection set contains the identity"));
    }
    if let Some(s) = (0..order).find(|&s| in_connection[s] && !in_connection[inverse[s]]) {
        return Err(Error::argument(format!(
            "connection set is not inverse-closed: {s} present without {}",
            inverse[s]
        )));
    }
    let rows = rows_from_predicate(order, |g, h| in_connection[table[g][inverse[h]]]);
    Ok(Graph::from_rows(rows, None).certify(true))
}

/// Circulant Cayley graph on `Z_n` with connection set `{±d : d in diffs}`.
pub fn cayley_zn(n: usize, diffs: &[usize]) -> Result<Graph> {
    if n < 1 {
        return Err(Error::argument("cayley_zn needs n >= 1"));
    }
    check_cap(n as u128, &format!("cayley_zn({n})"))?;
    let mut connection = vec![false; n];
    for &d in diffs {
        if d == 0 || d >= n {
            return Err(Error::argument(format!(
                "cayley_zn({n}) difference {d} must lie in 1..{n}"
            )));
        }
        connection[d] = true;
        connection[n - d] = true;
    }
    let rows = rows_from_predicate(n, |u, v| connection[v - u]);
    let labels = (0..n).map(Label::Ring).collect();
    Ok(Graph::from_rows(rows, Some(labels)).certify(true))
}

/// The cycle `C_n`, i.e. `cayley_zn(n, [1])`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::argument(format!("cycle({n}) needs n >= 3")));
    }
    cayley_zn(n, &[1])
}

/// `K_n`, i.e. `circ(1, n)`.
pub fn complete_graph(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::argument("complete(n) needs n >= 1"));
    }
    if n == 1 {
        return edgeless_graph(1);
    }
    circular_graph(1, n)
}

pub fn edgeless_graph(n: usize) -> Result<Graph> {
    check_cap(n as u128, "edgeless graph")?;
    Ok(Graph::from_rows(vec![BitSet::new(n); n], None).certify(true))
}

/// Direct (tensor) product. Vertex `(u, v)` is stored at `u * |H| + v`.
pub fn direct_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = check_cap(g.n() as u128 * h.n() as u128, "direct product")?;
    let hn = h.n();
    let mut rows = vec![BitSet::new(n); n];
    for u in 0..g.n() {
        for v in 0..hn {
            let row = &mut rows[u * hn + v];
            for u2 in g.neighbors(u).iter() {
                for v2 in h.neighbors(v).iter() {
                    row.insert(u2 * hn + v2);
                }
            }
        }
    }
    let labels = (0..n)
        .map(|i| Label::Product(ProductLabel::unflatten(i, hn)))
        .collect();
    let vt = g.certificates().vertex_transitive && h.certificates().vertex_transitive;
    Ok(Graph::from_rows(rows, Some(labels)).certify(vt))
}

/// Block-diagonal union: `G` on `0..|G|`, `H` shifted by `|G|`. Labels are
/// dropped. Vertex-transitivity is kept only for two identical copies of a
/// certified graph.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    if h.n() == 0 {
        return Ok(g.clone());
    }
    if g.n() == 0 {
        return Ok(h.clone());
    }
    let n = check_cap(g.n() as u128 + h.n() as u128, "disjoint union")?;
    let offset = g.n();
    let mut rows = vec![BitSet::new(n); n];
    for (u, row) in rows.iter_mut().enumerate().take(g.n()) {
        for v in g.neighbors(u).iter() {
            row.insert(v);
        }
    }
    for u in 0..h.n() {
        for v in h.neighbors(u).iter() {
            rows[offset + u].insert(offset + v);
        }
    }
    let vt = g == h && g.certificates().vertex_transitive;
    let mut out = Graph::from_rows(rows, None).certify(vt);
    out.certificates.connected = false;
    Ok(out)
}
