//! Finitely presented groups: canonical relator bookkeeping, deterministic
//! Tietze simplification, the involution transform, and quotients.

use crate::word::FreeWord;
use crate::Error;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;

/// Generators are 1-based indices into `symbols`; relators are freely and
/// cyclically reduced words, deduplicated up to cyclic rotation and
/// inversion, with empty words dropped.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    symbols: Vec<String>,
    relators: Vec<FreeWord>,
    pub meta: BTreeMap<String, String>,
}

impl Presentation {
    pub fn new(symbols: Vec<String>, relators: Vec<FreeWord>) -> Self {
        let n = symbols.len() as u32;
        let mut p = Presentation {
            symbols,
            relators: Vec::new(),
            meta: BTreeMap::new(),
        };
        for r in relators {
            assert!(
                r.max_gen() <= n,
                "relator {r:?} mentions a generator beyond the symbol table"
            );
            p.push_relator(r);
        }
        p
    }

    /// Numbered generators `a1..an` with no relators.
    pub fn free(prefix: &str, n: u32) -> Self {
        Self::new((1..=n).map(|i| format!("{prefix}{i}")).collect(), vec![])
    }

    fn push_relator(&mut self, r: FreeWord) {
        let r = r.cyclic_reduce();
        if r.is_identity() {
            return;
        }
        let canon = r.canonical_cyclic();
        if self.relators.iter().any(|s| s.canonical_cyclic() == canon) {
            return;
        }
        self.relators.push(r);
    }

    pub fn add_relator(&mut self, r: FreeWord) {
        assert!(r.max_gen() <= self.num_gens());
        self.push_relator(r);
    }

    pub fn num_gens(&self) -> u32 {
        self.symbols.len() as u32
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn gen_index(&self, name: &str) -> Option<u32> {
        self.symbols.iter().position(|s| s == name).map(|i| i as u32 + 1)
    }

    pub fn symbol(&self, g: u32) -> &str {
        &self.symbols[(g - 1) as usize]
    }

    pub fn with_meta(mut self, key: &str, value: &str) -> Self {
        self.meta.insert(key.to_string(), value.to_string());
        self
    }

    /// Sorted canonical relator list; the syntactic identity of the
    /// presentation up to relator rotation/inversion and ordering.
    pub fn canonical_relators(&self) -> Vec<FreeWord> {
        let mut rs: Vec<FreeWord> = self.relators.iter().map(|r| r.canonical_cyclic()).collect();
        rs.sort();
        rs
    }

    /// Same generator count and the same canonical relator set.
    pub fn same_presentation(&self, other: &Presentation) -> bool {
        self.num_gens() == other.num_gens() && self.canonical_relators() == other.canonical_relators()
    }

    /// Renames generators to `prefix1..prefixK` preserving order.
    pub fn renamed(&self, prefix: &str) -> Presentation {
        let mut out = self.clone();
        out.symbols = (1..=self.symbols.len()).map(|i| format!("{prefix}{i}")).collect();
        out
    }

    /// Locates a projective relator: a cyclic rotation of the full ascending
    /// product x_1⋯x_n or the full descending product x_n⋯x_1.
    pub fn find_projective_relator(&self) -> Option<usize> {
        let n = self.num_gens();
        if n == 0 {
            return None;
        }
        let asc = FreeWord::ascending_product(n).canonical_cyclic();
        let desc = FreeWord::descending_product(n).canonical_cyclic();
        self.relators
            .iter()
            .position(|r| {
                let c = r.canonical_cyclic();
                c == asc || c == desc
            })
    }

    /// Replaces the projective relator `P = μ1⋯μn` by the commutators
    /// `[μi, P]` for every generator and the relator `P²`. Models passing
    /// from a line arrangement to the birationally equivalent arrangement of
    /// smooth quadrics, a central `Z/2` extension.
    pub fn involution_transform(&self) -> Result<Presentation, Error> {
        let idx = self.find_projective_relator().ok_or(Error::MissingProjective)?;
        let product = self.relators[idx].clone();
        let mut relators: Vec<FreeWord> = self
            .relators
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, r)| r.clone())
            .collect();
        for g in 1..=self.num_gens() {
            relators.push(FreeWord::gen(g).commutator(&product));
        }
        relators.push(product.pow(2));
        let mut out = Presentation::new(self.symbols.clone(), relators);
        out.meta = self.meta.clone();
        out.meta.insert("involution".into(), "true".into());
        Ok(out)
    }

    /// Kills the named generators: each becomes a relator, which is the same
    /// as substituting the identity for it everywhere. No further
    /// simplification is performed.
    pub fn quotient_kill(&self, names: &[&str]) -> Result<Presentation, Error> {
        if names.is_empty() {
            return Ok(self.clone());
        }
        let mut kill = vec![false; self.symbols.len() + 1];
        for name in names {
            let g = self
                .gen_index(name)
                .ok_or_else(|| Error::UnknownGenerator((*name).to_string()))?;
            kill[g as usize] = true;
        }
        let mut remap = vec![0u32; self.symbols.len() + 1];
        let mut symbols = Vec::new();
        for g in 1..=self.symbols.len() as u32 {
            if !kill[g as usize] {
                symbols.push(self.symbols[(g - 1) as usize].clone());
                remap[g as usize] = symbols.len() as u32;
            }
        }
        let relators = self
            .relators
            .iter()
            .map(|r| {
                r.substitute(|g| kill[g as usize].then(FreeWord::identity))
                    .renumber(|g| remap[g as usize])
            })
            .collect();
        let mut out = Presentation::new(symbols, relators);
        out.meta = self.meta.clone();
        Ok(out)
    }

    pub fn simplify(&self, opts: &SimplifyOptions) -> (Presentation, SimplifyReport) {
        simplify(self, opts)
    }

    pub fn simplified(&self) -> Presentation {
        self.simplify(&SimplifyOptions::default()).0
    }

    /// Exponent-sum matrix: one row per relator, one column per generator.
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| r.exponent_vector(self.num_gens()))
            .collect()
    }

    pub fn render_word(&self, w: &FreeWord) -> String {
        if w.is_identity() {
            return "e".to_string();
        }
        w.syllables()
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    self.symbol(g).to_string()
                } else {
                    format!("{}^{}", self.symbol(g), e)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Relator as `... = e`, folding powers `(u)^k` and plain commutators.
    pub fn render_relator(&self, w: &FreeWord) -> String {
        if let Some((a, b)) = as_commutator(w) {
            return format!("[{}, {}] = e", self.symbol(a), self.symbol(b));
        }
        if let Some((base, k)) = as_power(w) {
            let inner = self.render_word(&base);
            if base.syllables().len() == 1 && base.len() == 1 {
                return format!("{inner}^{k} = e");
            }
            return format!("({inner})^{k} = e");
        }
        format!("{} = e", self.render_word(w))
    }

    pub fn render_text(&self) -> String {
        let gens = self.symbols.join(", ");
        if self.relators.is_empty() {
            return format!("< {gens} | >");
        }
        let rels = self
            .relators
            .iter()
            .map(|r| self.render_relator(r))
            .collect::<Vec<_>>()
            .join(", ");
        format!("< {gens} | {rels} >")
    }

    /// JSON wire form: generators by name, relators as [name, exponent]
    /// syllable lists.
    pub fn to_json(&self) -> Value {
        let relators: Vec<Value> = self
            .relators
            .iter()
            .map(|r| {
                Value::Array(
                    r.syllables()
                        .iter()
                        .map(|&(g, e)| json!([self.symbol(g), e]))
                        .collect(),
                )
            })
            .collect();
        json!({
            "generators": self.symbols,
            "relators": relators,
            "meta": self.meta,
        })
    }

    pub fn from_json(v: &Value) -> Result<Presentation, Error> {
        let bad = |msg: &str| Error::Invalid(format!("presentation json: {msg}"));
        let obj = v.as_object().ok_or_else(|| bad("expected an object"))?;
        let gens = obj
            .get("generators")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing `generators` array"))?;
        let symbols: Vec<String> = gens
            .iter()
            .map(|g| g.as_str().map(str::to_string).ok_or_else(|| bad("generator names must be strings")))
            .collect::<Result<_, _>>()?;
        {
            let mut seen = std::collections::BTreeSet::new();
            for s in &symbols {
                if !seen.insert(s) {
                    return Err(bad(&format!("duplicate generator `{s}`")));
                }
            }
        }
        let index = |name: &str| -> Result<u32, Error> {
            symbols
                .iter()
                .position(|s| s == name)
                .map(|i| i as u32 + 1)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
        };
        let mut relators = Vec::new();
        for r in obj
            .get("relators")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing `relators` array"))?
        {
            let syllables = r.as_array().ok_or_else(|| bad("relator must be an array"))?;
            let mut word = FreeWord::identity();
            for s in syllables {
                let pair = s.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("syllable must be [name, exponent]"))?;
                let name = pair[0].as_str().ok_or_else(|| bad("syllable name must be a string"))?;
                let e = pair[1]
                    .as_i64()
                    .and_then(|e| i32::try_from(e).ok())
                    .ok_or_else(|| bad("syllable exponent must be an integer"))?;
                word = word.mul(&FreeWord::gen_pow(index(name)?, e));
            }
            relators.push(word);
        }
        let mut p = Presentation::new(symbols, relators);
        if let Some(meta) = obj.get("meta").and_then(Value::as_object) {
            for (k, v) in meta {
                if let Some(s) = v.as_str() {
                    p.meta.insert(k.clone(), s.to_string());
                }
            }
        }
        Ok(p)
    }

    /// GAP export. Exact format, one statement per line:
    /// `F := FreeGroup( "a1", "a2" );` then `G := F / [ F.1*F.2, ... ];`.
    pub fn to_gap(&self) -> String {
        let names = self
            .symbols
            .iter()
            .map(|s| format!("\"{s}\""))
            .collect::<Vec<_>>()
            .join(", ");
        let rel = |w: &FreeWord| {
            w.syllables()
                .iter()
                .map(|&(g, e)| {
                    if e == 1 {
                        format!("F.{g}")
                    } else {
                        format!("F.{g}^{e}")
                    }
                })
                .collect::<Vec<_>>()
                .join("*")
        };
        let rels = self.relators.iter().map(|r| rel(r)).collect::<Vec<_>>().join(", ");
        format!("F := FreeGroup( {names} );\nG := F / [ {rels} ];\n")
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_text())
    }
}

/// `w = u^k` with k maximal (k ≥ 2), as a linear word.
fn as_power(w: &FreeWord) -> Option<(FreeWord, usize)> {
    let letters: Vec<(u32, i32)> = w.letters().collect();
    let n = letters.len();
    if n < 2 {
        return None;
    }
    for d in 1..n {
        if n % d != 0 {
            continue;
        }
        if (d..n).all(|i| letters[i] == letters[i - d]) {
            let base = FreeWord::from_syllables(letters[..d].iter().copied());
            return Some((base, n / d));
        }
    }
    None
}

/// `w = a b a⁻¹ b⁻¹` on two distinct single generators.
fn as_commutator(w: &FreeWord) -> Option<(u32, u32)> {
    let syl = w.syllables();
    if syl.len() == 4
        && syl[0].1 == 1
        && syl[1].1 == 1
        && syl[2] == (syl[0].0, -1)
        && syl[3] == (syl[1].0, -1)
        && syl[0].0 != syl[1].0
    {
        Some((syl[0].0, syl[1].0))
    } else {
        None
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SimplifyOptions {
    pub max_passes: usize,
    pub max_relator_len: usize,
}

impl Default for SimplifyOptions {
    fn default() -> Self {
        SimplifyOptions { max_passes: 64, max_relator_len: 4096 }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SimplifyReport {
    pub passes: usize,
    pub eliminated: Vec<String>,
    pub hit_pass_cap: bool,
    pub hit_len_cap: bool,
}

/// Deterministic Tietze simplification:
/// (a) cyclic reduction and dedup;
/// (b) eliminate a generator whenever a relator contains exactly one
///     occurrence of it with exponent ±1, shortest defining relator first,
///     ties broken by lowest generator index;
/// (c) length-reducing rewriting of relators by one another.
/// Iterates until a fixpoint or the pass cap. The result presents an
/// isomorphic group.
fn simplify(p: &Presentation, opts: &SimplifyOptions) -> (Presentation, SimplifyReport) {
    let mut report = SimplifyReport::default();
    let mut symbols = p.symbols.clone();
    let mut relators: Vec<FreeWord> = p.relators.clone();

    loop {
        if report.passes >= opts.max_passes {
            report.hit_pass_cap = true;
            break;
        }
        report.passes += 1;
        let mut changed = false;

        normalize(&mut relators);

        // (b) generator eliminations, one at a time.
        while let Some((ridx, g)) = pick_elimination(&relators, symbols.len() as u32) {
            let relator = relators[ridx].clone();
            let image = solve_for(&relator, g);
            let mut ok = true;
            let mut next: Vec<FreeWord> = Vec::with_capacity(relators.len() - 1);
            for (i, r) in relators.iter().enumerate() {
                if i == ridx {
                    continue;
                }
                let s = r
                    .substitute(|h| (h == g).then(|| image.clone()))
                    .cyclic_reduce();
                if s.len() > opts.max_relator_len {
                    ok = false;
                    break;
                }
                next.push(s);
            }
            if !ok {
                report.hit_len_cap = true;
                break;
            }
            // Drop generator g and renumber everything above it.
            let remap = |h: u32| if h > g { h - 1 } else { h };
            relators = next.into_iter().map(|r| r.renumber(remap)).collect();
            report.eliminated.push(symbols.remove((g - 1) as usize));
            normalize(&mut relators);
            changed = true;
        }

        // (c) shorten relators against each other.
        if rewrite_pass(&mut relators, opts) {
            changed = true;
            normalize(&mut relators);
        }

        if !changed {
            break;
        }
    }

    let mut out = Presentation::new(symbols, relators);
    out.meta = p.meta.clone();
    (out, report)
}

fn normalize(relators: &mut Vec<FreeWord>) {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::with_capacity(relators.len());
    let mut items: Vec<FreeWord> = relators.iter().map(|r| r.cyclic_reduce()).collect();
    items.sort_by_key(|r| (r.len(), r.canonical_cyclic()));
    for r in items {
        if r.is_identity() {
            continue;
        }
        if seen.insert(r.canonical_cyclic()) {
            out.push(r);
        }
    }
    *relators = out;
}

/// A generator occurring exactly once in some relator, with exponent ±1.
/// Returns (relator index, generator), minimizing (relator length, generator).
fn pick_elimination(relators: &[FreeWord], num_gens: u32) -> Option<(usize, u32)> {
    let mut best: Option<(usize, u32, usize)> = None;
    for (i, r) in relators.iter().enumerate() {
        let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
        for (g, _) in r.letters() {
            *counts.entry(g).or_insert(0) += 1;
        }
        for g in 1..=num_gens {
            if counts.get(&g) == Some(&1) {
                let cand = (i, g, r.len());
                let better = match best {
                    None => true,
                    Some((bi, bg, bl)) => (r.len(), g, i) < (bl, bg, bi),
                };
                let _ = cand;
                if better {
                    best = Some((i, g, r.len()));
                }
            }
        }
    }
    best.map(|(i, g, _)| (i, g))
}

/// Given a relator containing exactly one ±1 occurrence of `g`, returns the
/// word `w` (not involving that occurrence) with `g = w` in the group.
fn solve_for(relator: &FreeWord, g: u32) -> FreeWord {
    let letters: Vec<(u32, i32)> = relator.letters().collect();
    let pos = letters.iter().position(|&(h, _)| h == g).expect("occurrence");
    let sign = letters[pos].1;
    // Rotate so that the g-letter is first: relator ≐ g^sign · w.
    let rest = FreeWord::from_syllables(
        letters[pos + 1..]
            .iter()
            .chain(&letters[..pos])
            .copied(),
    );
    if sign > 0 {
        rest.inverse()
    } else {
        rest
    }
}

/// One deterministic sweep of Dehn-style shortening: for each relator, find
/// a cyclic segment that matches more than half of another relator (in any
/// rotation, either orientation) and replace it by the shorter complement.
fn rewrite_pass(relators: &mut [FreeWord], opts: &SimplifyOptions) -> bool {
    let mut changed = false;
    for target in 0..relators.len() {
        let mut progressed = true;
        while progressed {
            progressed = false;
            let r = relators[target].clone();
            if r.is_identity() {
                break;
            }
            for source in 0..relators.len() {
                if source == target {
                    continue;
                }
                let s = relators[source].clone();
                if s.is_identity() || s.len() > r.len() || s.len() < 2 {
                    continue;
                }
                if let Some(shorter) = shorten_with(&r, &s) {
                    if shorter.len() < relators[target].len() && shorter.len() <= opts.max_relator_len {
                        relators[target] = shorter;
                        changed = true;
                        progressed = true;
                        break;
                    }
                }
            }
        }
    }
    changed
}

/// Tries to shorten relator `r` using relator `s`: if some rotation of `s`
/// or `s⁻¹` factors as `u·v` with `|u| > |v|` and `u` occurs as a cyclic
/// segment of `r`, the segment is replaced by `v⁻¹`.
fn shorten_with(r: &FreeWord, s: &FreeWord) -> Option<FreeWord> {
    let r_letters: Vec<(u32, i32)> = r.letters().collect();
    let rl = r_letters.len();
    let sl = s.len();
    if rl < sl / 2 + 1 {
        return None;
    }
    let mut s_forms: Vec<Vec<(u32, i32)>> = Vec::new();
    let base: Vec<(u32, i32)> = s.letters().collect();
    let inv: Vec<(u32, i32)> = base.iter().rev().map(|&(g, e)| (g, -e)).collect();
    for form in [&base, &inv] {
        for rot in 0..sl {
            s_forms.push(form[rot..].iter().chain(&form[..rot]).copied().collect());
        }
    }

    let mut best: Option<FreeWord> = None;
    for start in 0..rl {
        for form in &s_forms {
            // Longest common prefix of r (cyclically from `start`) and form.
            let mut l = 0;
            while l < sl && l < rl && r_letters[(start + l) % rl] == form[l] {
                l += 1;
            }
            if 2 * l <= sl {
                continue;
            }
            // form = u·v with u of length l; u = v⁻¹ in the group, so the
            // matched segment of r may be replaced by v⁻¹.
            let v_inv: Vec<(u32, i32)> =
                form[l..].iter().rev().map(|&(g, e)| (g, -e)).collect();
            let mut letters: Vec<(u32, i32)> = Vec::with_capacity(rl - l + (sl - l));
            letters.extend(v_inv);
            for k in l..rl {
                letters.push(r_letters[(start + k) % rl]);
            }
            let cand = FreeWord::from_syllables(letters).cyclic_reduce();
            if best.as_ref().map_or(true, |b| {
                (cand.len(), cand.canonical_cyclic()) < (b.len(), b.canonical_cyclic())
            }) {
                best = Some(cand);
            }
        }
    }
    best.filter(|b| b.len() < r.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[(u32, i32)]) -> FreeWord {
        FreeWord::from_syllables(letters.iter().copied())
    }

    #[test]
    fn trivial_relator_removal() {
        // < a | a a⁻¹ > → < a | >
        let p = Presentation::new(vec!["a".into()], vec![w(&[(1, 1), (1, -1)])]);
        assert!(p.relators().is_empty());
    }

    #[test]
    fn dedup_up_to_rotation_and_inversion() {
        let p = Presentation::new(
            vec!["a".into(), "b".into()],
            vec![
                w(&[(1, 1), (2, 1), (1, 1), (2, 1)]),
                w(&[(2, 1), (1, 1), (2, 1), (1, 1)]),
                w(&[(2, -1), (1, -1), (2, -1), (1, -1)]),
            ],
        );
        assert_eq!(p.relators().len(), 1);
    }

    #[test]
    fn eliminate_simple_chain() {
        // < a, b | a = b, (ab)^2 > → < b | b^4 >  (isomorphic to Z4)
        let p = Presentation::new(
            vec!["a".into(), "b".into()],
            vec![w(&[(1, 1), (2, -1)]), w(&[(1, 1), (2, 1), (1, 1), (2, 1)])],
        );
        let (q, report) = p.simplify(&SimplifyOptions::default());
        assert_eq!(q.num_gens(), 1);
        assert_eq!(q.canonical_relators(), vec![w(&[(1, 4)])]);
        assert_eq!(report.eliminated.len(), 1);
    }

    #[test]
    fn simplify_is_idempotent() {
        let p = Presentation::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![
                w(&[(3, 1), (1, -1), (2, -1)]),               // c = ab
                w(&[(1, 1), (2, 1), (1, 1), (2, 1)]),         // (ab)^2
                w(&[(1, 1), (2, 1), (1, -1), (2, -1)]),       // [a,b]
            ],
        );
        let (q1, _) = p.simplify(&SimplifyOptions::default());
        let (q2, _) = q1.simplify(&SimplifyOptions::default());
        assert_eq!(q1, q2);
    }

    #[test]
    fn involution_on_one_generator() {
        // < μ1 | μ1 > → < μ1 | [μ1, μ1], μ1² > = Z2
        let p = Presentation::new(vec!["u1".into()], vec![FreeWord::gen(1)]);
        let q = p.involution_transform().unwrap();
        assert_eq!(q.canonical_relators(), vec![w(&[(1, 2)])]);
    }

    #[test]
    fn involution_requires_projective_relator() {
        let p = Presentation::new(vec!["a".into()], vec![w(&[(1, 2)])]);
        assert_eq!(p.involution_transform().unwrap_err(), Error::MissingProjective);
    }

    #[test]
    fn involution_two_lines() {
        let p = Presentation::new(
            vec!["u1".into(), "u2".into()],
            vec![w(&[(1, 1), (2, 1)])],
        );
        let q = p.involution_transform().unwrap();
        // [μ1, μ1μ2], [μ2, μ1μ2], (μ1μ2)²
        assert_eq!(q.relators().len(), 3);
        assert!(q
            .canonical_relators()
            .contains(&w(&[(1, 1), (2, 1), (1, 1), (2, 1)]).canonical_cyclic()));
    }

    #[test]
    fn quotient_kill_examples() {
        let p = Presentation::new(
            vec!["a1".into(), "a2".into(), "a3".into()],
            vec![w(&[(1, 1), (2, 1), (3, 1), (1, 1), (2, 1), (3, 1)])],
        );
        let q = p.quotient_kill(&["a3"]).unwrap();
        assert_eq!(q.num_gens(), 2);
        assert_eq!(
            q.canonical_relators(),
            vec![w(&[(1, 1), (2, 1), (1, 1), (2, 1)]).canonical_cyclic()]
        );

        assert_eq!(p.quotient_kill(&[]).unwrap(), p);

        let all = p.quotient_kill(&["a1", "a2", "a3"]).unwrap();
        assert_eq!(all.num_gens(), 0);
        assert!(all.relators().is_empty());

        assert!(p.quotient_kill(&["zz"]).is_err());
    }

    #[test]
    fn render_folds_powers_and_commutators() {
        let p = Presentation::new(
            vec!["a1".into(), "a2".into()],
            vec![
                w(&[(1, 1), (2, 1), (1, 1), (2, 1)]),
                w(&[(1, 1), (2, 1), (1, -1), (2, -1)]),
            ],
        );
        let texts: Vec<String> = p.relators().iter().map(|r| p.render_relator(r)).collect();
        assert!(texts.contains(&"(a1 a2)^2 = e".to_string()));
        assert!(texts.contains(&"[a1, a2] = e".to_string()));
    }

    #[test]
    fn json_round_trip() {
        let p = Presentation::new(
            vec!["a1".into(), "a2".into()],
            vec![w(&[(1, 1), (2, -2)])],
        )
        .with_meta("family", "a");
        let v = p.to_json();
        let q = Presentation::from_json(&v).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn gap_export_shape() {
        let p = Presentation::new(
            vec!["a1".into(), "a2".into()],
            vec![w(&[(1, 1), (2, 1), (1, 1), (2, 1)])],
        );
        assert_eq!(
            p.to_gap(),
            "F := FreeGroup( \"a1\", \"a2\" );\nG := F / [ F.1*F.2*F.1*F.2 ];\n"
        );
    }
}
