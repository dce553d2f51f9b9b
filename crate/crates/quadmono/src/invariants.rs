//! Computable isomorphism invariants: abelianization via exact integer
//! Smith normal form, and homomorphism counting into small finite groups.
//! Fingerprint equality is reported as consistency, never isomorphism.

use crate::presentation::Presentation;
use crate::Error;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Result of a Smith normal form computation. `invariant_factors` carries
/// the diagonal entries ≥ 2 (units are dropped), in divisibility order;
/// `rank` counts all nonzero diagonal entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    pub invariant_factors: Vec<u64>,
    pub rank: usize,
}

/// Exact integer Smith normal form of the given row matrix.
pub fn smith_normal_form(rows: &[Vec<i64>]) -> Snf {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols, "ragged matrix");
            r.iter().map(|&x| x as i128).collect()
        })
        .collect();

    let mut diag: Vec<i128> = Vec::new();
    let mut k = 0usize;
    while k < nrows && k < ncols {
        // Pivot: smallest nonzero absolute value in the trailing block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..nrows {
            for j in k..ncols {
                if m[i][j] != 0
                    && pivot.map_or(true, |(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(k, pi);
        for row in m.iter_mut() {
            row.swap(k, pj);
        }
        if m[k][k] < 0 {
            for j in 0..ncols {
                m[k][j] = -m[k][j];
            }
        }

        let mut dirty = true;
        while dirty {
            dirty = false;
            for i in k + 1..nrows {
                let q = div_round(m[i][k], m[k][k]);
                if q != 0 {
                    for j in 0..ncols {
                        m[i][j] -= q * m[k][j];
                    }
                }
                if m[i][k] != 0 {
                    // Remainder is smaller than the pivot: swap up and redo.
                    m.swap(k, i);
                    if m[k][k] < 0 {
                        for j in 0..ncols {
                            m[k][j] = -m[k][j];
                        }
                    }
                    dirty = true;
                }
            }
            for j in k + 1..ncols {
                let q = div_round(m[k][j], m[k][k]);
                if q != 0 {
                    for i in 0..nrows {
                        m[i][j] -= q * m[i][k];
                    }
                }
                if m[k][j] != 0 {
                    for row in m.iter_mut() {
                        row.swap(k, j);
                    }
                    if m[k][k] < 0 {
                        for jj in 0..ncols {
                            m[k][jj] = -m[k][jj];
                        }
                    }
                    dirty = true;
                }
            }
            if !dirty {
                // Enforce divisibility of the trailing block by the pivot.
                'outer: for i in k + 1..nrows {
                    for j in k + 1..ncols {
                        if m[i][j] % m[k][k] != 0 {
                            for jj in 0..ncols {
                                let add = m[i][jj];
                                m[k][jj] += add;
                            }
                            dirty = true;
                            break 'outer;
                        }
                    }
                }
            }
        }
        diag.push(m[k][k]);
        k += 1;
    }

    let rank = diag.len();
    let invariant_factors = diag
        .into_iter()
        .map(|d| u64::try_from(d).expect("positive diagonal"))
        .filter(|&d| d >= 2)
        .collect();
    Snf { invariant_factors, rank }
}

fn div_round(a: i128, b: i128) -> i128 {
    // Round toward the nearest multiple so remainders shrink fast.
    let q = a / b;
    let r = a - q * b;
    if 2 * r.abs() > b.abs() {
        q + r.signum() * b.signum()
    } else {
        q
    }
}

/// Abelianization data: `Z^free_rank ⊕ Z_{d1} ⊕ …` with d1 | d2 | ….
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub free_rank: u32,
    pub torsion: Vec<u64>,
}

impl AbelianInvariants {
    pub fn new(free_rank: u32, torsion: Vec<u64>) -> Self {
        for pair in torsion.windows(2) {
            assert!(pair[1] % pair[0] == 0, "torsion must form a divisibility chain");
        }
        assert!(torsion.iter().all(|&d| d >= 2));
        AbelianInvariants { free_rank, torsion }
    }
}

impl fmt::Debug for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for _ in 0..self.free_rank {
            parts.push("Z".to_string());
        }
        for d in &self.torsion {
            parts.push(format!("Z{d}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// SNF of the relator exponent-sum matrix.
pub fn abelianization(p: &Presentation) -> AbelianInvariants {
    let snf = smith_normal_form(&p.exponent_matrix());
    AbelianInvariants::new(p.num_gens() - snf.rank as u32, snf.invariant_factors)
}

/// A finite group given by its multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    pub name: String,
    order: usize,
    /// Flattened table: `mul[a * order + b] = a·b`.
    mul: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    element_orders: Vec<u32>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order)
    }
}

impl FiniteGroup {
    /// Builds and validates a group from a multiplication table. Identity
    /// and inverses are checked exactly; associativity is checked on all
    /// triples up to order 24, sampled beyond that.
    pub fn from_table(name: &str, table: Vec<Vec<usize>>) -> Result<Self, Error> {
        let order = table.len();
        if order == 0 {
            return Err(Error::BadGroupTable("empty table".into()));
        }
        let mut mul = vec![0usize; order * order];
        for (a, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::BadGroupTable(format!("row {a} has wrong length")));
            }
            for (b, &c) in row.iter().enumerate() {
                if c >= order {
                    return Err(Error::BadGroupTable(format!("entry ({a},{b}) out of range")));
                }
                mul[a * order + b] = c;
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| mul[e * order + a] == a && mul[a * order + e] == a))
            .ok_or_else(|| Error::BadGroupTable("no identity element".into()))?;
        let mut inverse = vec![usize::MAX; order];
        for a in 0..order {
            inverse[a] = (0..order)
                .find(|&b| mul[a * order + b] == identity && mul[b * order + a] == identity)
                .ok_or_else(|| Error::BadGroupTable(format!("element {a} has no inverse")))?;
        }
        // Associativity: exhaustive on small tables, deterministic sample on
        // larger ones.
        let check = |a: usize, b: usize, c: usize, mul: &[usize]| {
            mul[mul[a * order + b] * order + c] == mul[a * order + mul[b * order + c]]
        };
        if order <= 24 {
            for a in 0..order {
                for b in 0..order {
                    for c in 0..order {
                        if !check(a, b, c, &mul) {
                            return Err(Error::BadGroupTable(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9e3779b97f4a7c15u64;
            for _ in 0..8192 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let a = (state >> 33) as usize % order;
                let b = (state >> 17) as usize % order;
                let c = state as usize % order;
                if !check(a, b, c, &mul) {
                    return Err(Error::BadGroupTable(format!(
                        "associativity fails at ({a},{b},{c})"
                    )));
                }
            }
        }
        let mut element_orders = vec![0u32; order];
        for a in 0..order {
            let mut x = a;
            let mut k = 1;
            while x != identity {
                x = mul[x * order + a];
                k += 1;
            }
            element_orders[a] = k;
        }
        Ok(FiniteGroup {
            name: name.to_string(),
            order,
            mul,
            identity,
            inverse,
            element_orders,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn element_order(&self, a: usize) -> u32 {
        self.element_orders[a]
    }

    /// Conjugacy classes as (representative, class size).
    pub fn conjugacy_classes(&self) -> Vec<(usize, usize)> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for a in 0..self.order {
            if seen[a] {
                continue;
            }
            let mut size = 0;
            for t in 0..self.order {
                let c = self.mul(self.mul(t, a), self.inv(t));
                if !seen[c] {
                    seen[c] = true;
                    size += 1;
                }
            }
            classes.push((a, size));
        }
        classes
    }

    /// The symmetric group S_n on {0..n−1}, elements in lexicographic order.
    pub fn symmetric(n: usize) -> Self {
        let perms = permutations(n);
        Self::from_perm_set(&format!("s{n}"), perms)
    }

    /// The alternating group A_n.
    pub fn alternating(n: usize) -> Self {
        let perms: Vec<Vec<usize>> = permutations(n)
            .into_iter()
            .filter(|p| perm_sign(p) == 1)
            .collect();
        Self::from_perm_set(&format!("a{n}"), perms)
    }

    /// The dihedral group of the square (order 8), as symmetries of
    /// {0,1,2,3}.
    pub fn dihedral4() -> Self {
        let rot = vec![1usize, 2, 3, 0];
        let flip = vec![1usize, 0, 3, 2];
        let mut elems: Vec<Vec<usize>> = Vec::new();
        let mut r = vec![0usize, 1, 2, 3];
        for _ in 0..4 {
            elems.push(r.clone());
            elems.push(compose(&flip, &r));
            r = compose(&rot, &r);
        }
        elems.sort();
        elems.dedup();
        assert_eq!(elems.len(), 8);
        Self::from_perm_set("d4", elems)
    }

    pub fn cyclic(n: usize) -> Self {
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(&format!("z{n}"), table).expect("cyclic group")
    }

    pub fn trivial() -> Self {
        Self::from_table("trivial", vec![vec![0]]).expect("trivial group")
    }

    /// Built-in battery members by name: s3, s4, a4, d4, z6.
    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "s3" => Some(Self::symmetric(3)),
            "s4" => Some(Self::symmetric(4)),
            "a4" => Some(Self::alternating(4)),
            "d4" => Some(Self::dihedral4()),
            "z6" => Some(Self::cyclic(6)),
            "trivial" => Some(Self::trivial()),
            _ => None,
        }
    }

    fn from_perm_set(name: &str, perms: Vec<Vec<usize>>) -> Self {
        let index: BTreeMap<Vec<usize>, usize> =
            perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let order = perms.len();
        let table: Vec<Vec<usize>> = (0..order)
            .map(|a| {
                (0..order)
                    .map(|b| index[&compose(&perms[a], &perms[b])])
                    .collect()
            })
            .collect();
        Self::from_table(name, table).expect("permutation group")
    }

    /// Parses `{"name": ..., "table": [[..]]}`.
    pub fn from_json(v: &serde_json::Value) -> Result<Self, Error> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::BadGroupTable("expected an object".into()))?;
        let name = obj.get("name").and_then(|n| n.as_str()).unwrap_or("user");
        let table = obj
            .get("table")
            .and_then(|t| t.as_array())
            .ok_or_else(|| Error::BadGroupTable("missing `table`".into()))?;
        let rows: Result<Vec<Vec<usize>>, Error> = table
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::BadGroupTable("table row must be an array".into()))?
                    .iter()
                    .map(|x| {
                        x.as_u64()
                            .map(|v| v as usize)
                            .ok_or_else(|| Error::BadGroupTable("table entries must be integers".into()))
                    })
                    .collect()
            })
            .collect();
        Self::from_table(name, rows?)
    }
}

fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    // (f∘g)(x) = f(g(x))
    g.iter().map(|&x| f[x]).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, n, &mut out);
    out.sort();
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

fn perm_sign(p: &[usize]) -> i32 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1;
    for i in 0..p.len() {
        if seen[i] {
            continue;
        }
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = p[j];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

pub const DEFAULT_HOM_CAP: u128 = 100_000_000;

/// Exact number of maps generators → G satisfying all relators, by
/// exhaustive enumeration. The first generator ranges over conjugacy class
/// representatives only (conjugating a homomorphism gives a homomorphism),
/// weighted by class size.
pub fn count_homs(p: &Presentation, group: &FiniteGroup, cap: u128) -> Result<u64, Error> {
    let n = p.num_gens() as usize;
    let order = group.order();
    let space = (order as u128)
        .checked_pow(n as u32)
        .ok_or(Error::CapExceeded { space: u128::MAX, cap })?;
    if space > cap {
        return Err(Error::CapExceeded { space, cap });
    }
    if n == 0 {
        return Ok(1);
    }

    // Relators become checkable once every generator they mention is
    // assigned; group them by that depth.
    let mut by_depth: Vec<Vec<Vec<(usize, bool)>>> = vec![Vec::new(); n + 1];
    for r in p.relators() {
        let depth = r.max_gen() as usize;
        let letters: Vec<(usize, bool)> = r.letters().map(|(g, e)| ((g - 1) as usize, e > 0)).collect();
        by_depth[depth].push(letters);
    }

    fn eval(letters: &[(usize, bool)], assign: &[usize], group: &FiniteGroup) -> usize {
        let mut acc = group.identity();
        for &(g, positive) in letters {
            let x = if positive { assign[g] } else { group.inv(assign[g]) };
            acc = group.mul(acc, x);
        }
        acc
    }

    fn dfs(
        depth: usize,
        n: usize,
        assign: &mut Vec<usize>,
        group: &FiniteGroup,
        by_depth: &[Vec<Vec<(usize, bool)>>],
    ) -> u64 {
        if depth > n {
            return 1;
        }
        let mut total = 0u64;
        for x in 0..group.order() {
            assign[depth - 1] = x;
            if by_depth[depth]
                .iter()
                .all(|r| eval(r, assign, group) == group.identity())
            {
                total += dfs(depth + 1, n, assign, group, by_depth);
            }
        }
        total
    }

    let mut assign = vec![0usize; n];
    let mut total = 0u64;
    for (rep, size) in group.conjugacy_classes() {
        assign[0] = rep;
        if !by_depth[1]
            .iter()
            .all(|r| eval(r, &assign, group) == group.identity())
        {
            continue;
        }
        let sub = if n == 1 {
            1
        } else {
            dfs(2, n, &mut assign, group, &by_depth)
        };
        total += size as u64 * sub;
    }
    Ok(total)
}

/// Abelian invariants plus hom counts into a battery of finite groups.
/// Equal fingerprints are *consistent with* isomorphism, nothing stronger.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub abelian: AbelianInvariants,
    pub hom_counts: BTreeMap<String, u64>,
}

impl fmt::Debug for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ab = {:?}, homs = {{", self.abelian)?;
        let mut first = true;
        for (name, count) in &self.hom_counts {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{name}: {count}")?;
        }
        write!(f, "}}")
    }
}

/// The default battery: S3, S4, A4, D4, Z6 (all of order ≤ 24).
pub fn default_battery() -> Vec<FiniteGroup> {
    ["s3", "s4", "a4", "d4", "z6"]
        .iter()
        .map(|n| FiniteGroup::builtin(n).unwrap())
        .collect()
}

/// Simplifies the presentation, then computes the fingerprint.
pub fn fingerprint(p: &Presentation, battery: &[FiniteGroup], cap: u128) -> Result<Fingerprint, Error> {
    let q = p.simplified();
    let mut hom_counts = BTreeMap::new();
    for g in battery {
        hom_counts.insert(g.name.clone(), count_homs(&q, g, cap)?);
    }
    Ok(Fingerprint { abelian: abelianization(&q), hom_counts })
}

/// A machine-checkable bigness certificate: killing all generators outside
/// `pair` is a quotient (it only adds relators), and the quotient's
/// fingerprint matches ⟨a, b | (ab)²⟩ ≅ Z * Z₂, which is big. Bigness of a
/// quotient lifts to the original group.
#[derive(Clone, Debug)]
pub struct BignessCertificate {
    pub killed: Vec<String>,
    pub pair: (String, String),
    pub quotient: Presentation,
    pub quotient_fingerprint: Fingerprint,
    pub target_fingerprint: Fingerprint,
}

/// The comparison target ⟨a, b | (a b)²⟩.
pub fn z_star_z2() -> Presentation {
    Presentation::new(
        vec!["a".into(), "b".into()],
        vec![crate::word::FreeWord::from_syllables([(1, 1), (2, 1), (1, 1), (2, 1)])],
    )
}

pub fn bigness_certificate(
    p: &Presentation,
    pair: (&str, &str),
    battery: &[FiniteGroup],
    cap: u128,
) -> Result<BignessCertificate, Error> {
    if p.num_gens() < 2 {
        return Err(Error::Invalid(
            "bigness certificate needs at least two generators".into(),
        ));
    }
    for name in [pair.0, pair.1] {
        if p.gen_index(name).is_none() {
            return Err(Error::UnknownGenerator(name.to_string()));
        }
    }
    if pair.0 == pair.1 {
        return Err(Error::Invalid("meridian pair must be distinct".into()));
    }
    let killed: Vec<String> = p
        .symbols()
        .iter()
        .filter(|s| s.as_str() != pair.0 && s.as_str() != pair.1)
        .cloned()
        .collect();
    let kill_refs: Vec<&str> = killed.iter().map(String::as_str).collect();
    let quotient = p.quotient_kill(&kill_refs)?.simplified();
    let quotient_fingerprint = fingerprint(&quotient, battery, cap)?;
    let target_fingerprint = fingerprint(&z_star_z2(), battery, cap)?;
    if quotient_fingerprint != target_fingerprint {
        return Err(Error::Invalid(format!(
            "bigness: quotient fingerprint {quotient_fingerprint:?} does not match Z * Z2 {target_fingerprint:?} (not a disproof)"
        )));
    }
    Ok(BignessCertificate {
        killed,
        pair: (pair.0.to_string(), pair.1.to_string()),
        quotient,
        quotient_fingerprint,
        target_fingerprint,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::FreeWord;

    fn w(letters: &[(u32, i32)]) -> FreeWord {
        FreeWord::from_syllables(letters.iter().copied())
    }

    #[test]
    fn snf_row_of_twos() {
        // [[2,2,…,2]] → factors (2), rank 1.
        for n in 1..=6 {
            let snf = smith_normal_form(&[vec![2i64; n]]);
            assert_eq!(snf.rank, 1);
            assert_eq!(snf.invariant_factors, vec![2]);
        }
    }

    #[test]
    fn snf_zero_matrix() {
        let snf = smith_normal_form(&[vec![0, 0], vec![0, 0]]);
        assert_eq!(snf.rank, 0);
        assert!(snf.invariant_factors.is_empty());
    }

    #[test]
    fn snf_normalizes_divisibility() {
        // diag(2,3) → diag(1,6): unit dropped, factor 6.
        let snf = smith_normal_form(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(snf.rank, 2);
        assert_eq!(snf.invariant_factors, vec![6]);
    }

    #[test]
    fn snf_matches_brute_force_on_2x2() {
        // Oracle: |det| equals the product of all diagonal entries, and the
        // gcd of the entries equals the first diagonal entry, for 2x2
        // matrices — classical minor-gcd characterization.
        let cases: &[[i64; 4]] = &[
            [2, 0, 0, 3],
            [4, 6, 2, 8],
            [-3, 1, 7, 2],
            [6, 4, 2, 0],
            [5, 5, 5, 5],
        ];
        for c in cases {
            let rows = vec![vec![c[0], c[1]], vec![c[2], c[3]]];
            let snf = smith_normal_form(&rows);
            let det = (c[0] * c[3] - c[1] * c[2]).unsigned_abs();
            let gcd4 = gcd(gcd(c[0].unsigned_abs(), c[1].unsigned_abs()),
                           gcd(c[2].unsigned_abs(), c[3].unsigned_abs()));
            let mut full: Vec<u64> = snf.invariant_factors.clone();
            while full.len() < snf.rank {
                full.insert(0, 1);
            }
            if det != 0 {
                assert_eq!(snf.rank, 2);
                assert_eq!(full.iter().product::<u64>(), det, "case {c:?}");
                assert_eq!(full[0], gcd4, "case {c:?}");
            } else if gcd4 != 0 {
                assert_eq!(snf.rank, 1);
                assert_eq!(full[0], gcd4, "case {c:?}");
            }
        }
    }

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 { a } else { gcd(b, a % b) }
    }

    #[test]
    fn abelianization_examples() {
        // ⟨a | a²⟩ → Z2
        let z2 = Presentation::new(vec!["a".into()], vec![w(&[(1, 2)])]);
        let ab = abelianization(&z2);
        assert_eq!(ab.free_rank, 0);
        assert_eq!(ab.torsion, vec![2]);

        // free of rank 2
        let f2 = Presentation::free("a", 2);
        let ab = abelianization(&f2);
        assert_eq!(ab.free_rank, 2);
        assert!(ab.torsion.is_empty());
    }

    #[test]
    fn builtin_group_orders() {
        assert_eq!(FiniteGroup::symmetric(3).order(), 6);
        assert_eq!(FiniteGroup::symmetric(4).order(), 24);
        assert_eq!(FiniteGroup::alternating(4).order(), 12);
        assert_eq!(FiniteGroup::dihedral4().order(), 8);
        assert_eq!(FiniteGroup::cyclic(6).order(), 6);
        // |elements of order dividing 2| in S3: identity + 3 transpositions.
        let s3 = FiniteGroup::symmetric(3);
        let count = (0..6).filter(|&a| s3.element_order(a) <= 2).count();
        assert_eq!(count, 4);
    }

    #[test]
    fn bad_tables_rejected() {
        // 2x2 with no identity.
        let t = vec![vec![1, 0], vec![0, 0]];
        assert!(FiniteGroup::from_table("bad", t).is_err());
    }

    #[test]
    fn count_homs_examples() {
        let s3 = FiniteGroup::symmetric(3);
        // ⟨a | a²⟩ into S3 → 4 (elements of order ≤ 2, brute force above).
        let p = Presentation::new(vec!["a".into()], vec![w(&[(1, 2)])]);
        assert_eq!(count_homs(&p, &s3, DEFAULT_HOM_CAP).unwrap(), 4);

        // ⟨a, b | (ab)²⟩ into S3 → 24: a free, ab of order ≤ 2.
        let p = Presentation::new(
            vec!["a".into(), "b".into()],
            vec![w(&[(1, 1), (2, 1), (1, 1), (2, 1)])],
        );
        assert_eq!(count_homs(&p, &s3, DEFAULT_HOM_CAP).unwrap(), 24);

        // anything into the trivial group → 1.
        assert_eq!(count_homs(&p, &FiniteGroup::trivial(), DEFAULT_HOM_CAP).unwrap(), 1);
    }

    #[test]
    fn count_homs_cap() {
        let p = Presentation::free("a", 8);
        let s4 = FiniteGroup::symmetric(4);
        assert!(matches!(
            count_homs(&p, &s4, 1000),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn fingerprint_trivial() {
        let p = Presentation::new(vec!["a".into()], vec![FreeWord::gen(1)]);
        let fp = fingerprint(&p, &default_battery(), DEFAULT_HOM_CAP).unwrap();
        assert_eq!(fp.abelian.free_rank, 0);
        assert!(fp.abelian.torsion.is_empty());
        assert!(fp.hom_counts.values().all(|&c| c == 1));
    }

    #[test]
    fn bigness_precondition() {
        let p = Presentation::new(vec!["a".into()], vec![w(&[(1, 2)])]);
        assert!(bigness_certificate(&p, ("a", "a"), &default_battery(), DEFAULT_HOM_CAP).is_err());
    }
}
