//! Group specifications with decidable normal forms.
//!
//! Supported kinds: free, free abelian, free products, direct products, and
//! confluent length-nonincreasing rewriting systems. Every supported kind has
//! geodesic normal forms: the canonical word of an element is a shortest word
//! representing it, so word length equals word-metric distance from the
//! identity. That single fact is what keeps every downstream metric
//! computation exact.

pub mod ball;
pub mod rewriting;

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use rewriting::RewritingSystem;

/// One symbol of the symmetric generating set: generator index plus an
/// inversion flag. Ordered by `(gen, inv)`, so `a < a^-1 < b < b^-1 < ...`;
/// this order induces the lexicographic order used for all tie-breaking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: u32,
    pub inv: bool,
}

impl Letter {
    pub fn inverse(self) -> Letter {
        Letter {
            gen: self.gen,
            inv: !self.inv,
        }
    }
}

/// A group element in canonical normal form.
///
/// `Ord` is shortlex: shorter words first, then letter-lexicographic. All
/// "lexicographically least" tie-breaking rules in the crate refer to this
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    word: Vec<Letter>,
}

impl Element {
    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    /// Word length; equals the word-metric distance from the identity.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
    }
}

#[derive(Debug, Clone)]
pub enum GroupKind {
    Free { rank: usize },
    FreeAbelian { rank: usize },
    FreeProduct { factors: Vec<GroupSpec> },
    DirectProduct { factors: Vec<GroupSpec> },
    Rewriting { system: RewritingSystem },
}

/// A finite description of a finitely generated group with a computable
/// canonical form.
#[derive(Debug, Clone)]
pub struct GroupSpec {
    kind: GroupKind,
    gen_names: Vec<String>,
    name_index: HashMap<String, u32>,
    /// For product kinds: first generator index of each factor.
    factor_offsets: Vec<u32>,
}

fn default_names(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n)
            .map(|i| ((b'a' + i as u8) as char).to_string())
            .collect()
    } else {
        (0..n).map(|i| format!("g{i}")).collect()
    }
}

impl GroupSpec {
    pub fn free(rank: usize) -> Result<GroupSpec> {
        if rank == 0 {
            return Err(Error::BadGroupSpec("rank must be positive".into()));
        }
        Self::assemble(GroupKind::Free { rank }, default_names(rank))
    }

    pub fn free_abelian(rank: usize) -> Result<GroupSpec> {
        if rank == 0 {
            return Err(Error::BadGroupSpec("rank must be positive".into()));
        }
        Self::assemble(GroupKind::FreeAbelian { rank }, default_names(rank))
    }

    pub fn free_product(factors: Vec<GroupSpec>) -> Result<GroupSpec> {
        if factors.len() < 2 {
            return Err(Error::BadGroupSpec(
                "a product needs at least two factors".into(),
            ));
        }
        let total: usize = factors.iter().map(|f| f.generator_count()).sum();
        Self::assemble(GroupKind::FreeProduct { factors }, default_names(total))
    }

    pub fn direct_product(factors: Vec<GroupSpec>) -> Result<GroupSpec> {
        if factors.len() < 2 {
            return Err(Error::BadGroupSpec(
                "a product needs at least two factors".into(),
            ));
        }
        let total: usize = factors.iter().map(|f| f.generator_count()).sum();
        Self::assemble(GroupKind::DirectProduct { factors }, default_names(total))
    }

    /// A group presented by a confluent, length-nonincreasing rewriting
    /// system over `generators`. Rules are pairs of words in the usual token
    /// syntax; free-cancellation rules are added automatically. Rejected
    /// unless every rule strictly decreases shortlex order and the system is
    /// locally confluent (critical-pair check).
    pub fn rewriting(generators: Vec<String>, rules: &[(String, String)]) -> Result<GroupSpec> {
        if generators.is_empty() {
            return Err(Error::BadGroupSpec("no generators given".into()));
        }
        // A provisional spec used only to parse the rule words.
        let proto = Self::assemble(
            GroupKind::Free {
                rank: generators.len(),
            },
            generators.clone(),
        )?;
        let mut parsed = Vec::new();
        for (lhs, rhs) in rules {
            parsed.push((proto.parse_letters(lhs)?, proto.parse_letters(rhs)?));
        }
        let system = RewritingSystem::new(generators.len(), parsed, |w| proto.format_letters(w))?;
        Self::assemble(GroupKind::Rewriting { system }, generators)
    }

    /// Replaces the flattened generator names (same length required).
    pub fn with_generator_names(mut self, names: Vec<String>) -> Result<GroupSpec> {
        if names.len() != self.gen_names.len() {
            return Err(Error::BadGroupSpec(format!(
                "expected {} generator names, got {}",
                self.gen_names.len(),
                names.len()
            )));
        }
        self.gen_names = names;
        self.name_index = Self::build_name_index(&self.gen_names)?;
        Ok(self)
    }

    fn assemble(kind: GroupKind, gen_names: Vec<String>) -> Result<GroupSpec> {
        let mut factor_offsets = Vec::new();
        if let GroupKind::FreeProduct { factors } | GroupKind::DirectProduct { factors } = &kind {
            let mut off = 0u32;
            for f in factors {
                factor_offsets.push(off);
                off += f.generator_count() as u32;
            }
        }
        let name_index = Self::build_name_index(&gen_names)?;
        Ok(GroupSpec {
            kind,
            gen_names,
            name_index,
            factor_offsets,
        })
    }

    fn build_name_index(names: &[String]) -> Result<HashMap<String, u32>> {
        let mut idx = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n == "1" || n.contains(['^', '*', ' ', '\t']) {
                return Err(Error::BadGroupSpec(format!(
                    "invalid generator name `{n}`"
                )));
            }
            if idx.insert(n.clone(), i as u32).is_some() {
                return Err(Error::BadGroupSpec(format!(
                    "duplicate generator name `{n}`"
                )));
            }
        }
        Ok(idx)
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn generator_count(&self) -> usize {
        match &self.kind {
            GroupKind::Free { rank } | GroupKind::FreeAbelian { rank } => *rank,
            GroupKind::FreeProduct { factors } | GroupKind::DirectProduct { factors } => {
                factors.iter().map(|f| f.generator_count()).sum()
            }
            GroupKind::Rewriting { system } => system.generator_count(),
        }
    }

    pub fn generator_names(&self) -> &[String] {
        &self.gen_names
    }

    /// The symmetric generating set, in letter order.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(2 * self.generator_count());
        for gen in 0..self.generator_count() as u32 {
            out.push(Letter { gen, inv: false });
            out.push(Letter { gen, inv: true });
        }
        out
    }

    pub fn identity(&self) -> Element {
        Element { word: Vec::new() }
    }

    /// Canonical representative of an arbitrary word in the generators.
    pub fn normal_form(&self, word: &[Letter]) -> Element {
        Element {
            word: self.normalize(word),
        }
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let mut w = Vec::with_capacity(a.word.len() + b.word.len());
        w.extend_from_slice(&a.word);
        w.extend_from_slice(&b.word);
        self.normal_form(&w)
    }

    pub fn inv(&self, a: &Element) -> Element {
        let w: Vec<Letter> = a.word.iter().rev().map(|l| l.inverse()).collect();
        self.normal_form(&w)
    }

    /// Exact word-metric distance `d(a, b) = |a^-1 b|`. Exact because normal
    /// forms are geodesic for every supported kind.
    pub fn distance(&self, a: &Element, b: &Element) -> usize {
        self.mul(&self.inv(a), b).len()
    }

    fn factor_of(&self, gen: u32) -> usize {
        match self.factor_offsets.binary_search(&gen) {
            Ok(i) => i,
            Err(i) => i - 1,
        }
    }

    fn normalize(&self, word: &[Letter]) -> Vec<Letter> {
        match &self.kind {
            GroupKind::Free { .. } => {
                let mut stack: Vec<Letter> = Vec::with_capacity(word.len());
                for &l in word {
                    if stack.last() == Some(&l.inverse()) {
                        stack.pop();
                    } else {
                        stack.push(l);
                    }
                }
                stack
            }
            GroupKind::FreeAbelian { rank } => {
                let mut exp = vec![0i64; *rank];
                for l in word {
                    exp[l.gen as usize] += if l.inv { -1 } else { 1 };
                }
                let mut out = Vec::new();
                for (gen, &e) in exp.iter().enumerate() {
                    let letter = Letter {
                        gen: gen as u32,
                        inv: e < 0,
                    };
                    out.extend(std::iter::repeat_n(letter, e.unsigned_abs() as usize));
                }
                out
            }
            GroupKind::FreeProduct { factors } => {
                let mut syllables: Vec<(usize, Vec<Letter>)> = Vec::new();
                for &l in word {
                    let fi = self.factor_of(l.gen);
                    let local = Letter {
                        gen: l.gen - self.factor_offsets[fi],
                        inv: l.inv,
                    };
                    match syllables.last_mut() {
                        Some((top, w)) if *top == fi => {
                            w.push(local);
                            *w = factors[fi].normalize(w);
                            if w.is_empty() {
                                syllables.pop();
                            }
                        }
                        _ => {
                            let w = factors[fi].normalize(&[local]);
                            if !w.is_empty() {
                                syllables.push((fi, w));
                            }
                        }
                    }
                }
                let mut out = Vec::new();
                for (fi, w) in syllables {
                    let off = self.factor_offsets[fi];
                    out.extend(w.into_iter().map(|l| Letter {
                        gen: l.gen + off,
                        inv: l.inv,
                    }));
                }
                out
            }
            GroupKind::DirectProduct { factors } => {
                let mut buckets: Vec<Vec<Letter>> = vec![Vec::new(); factors.len()];
                for &l in word {
                    let fi = self.factor_of(l.gen);
                    buckets[fi].push(Letter {
                        gen: l.gen - self.factor_offsets[fi],
                        inv: l.inv,
                    });
                }
                let mut out = Vec::new();
                for (fi, bucket) in buckets.into_iter().enumerate() {
                    let off = self.factor_offsets[fi];
                    out.extend(factors[fi].normalize(&bucket).into_iter().map(|l| Letter {
                        gen: l.gen + off,
                        inv: l.inv,
                    }));
                }
                out
            }
            GroupKind::Rewriting { system } => system.normalize(word),
        }
    }

    /// Parses a word: whitespace- or `*`-separated tokens, each `name`,
    /// `name^k` (integer `k`, possibly negative), or `1` for the identity.
    pub fn parse_word(&self, input: &str) -> Result<Element> {
        Ok(self.normal_form(&self.parse_letters(input)?))
    }

    fn parse_letters(&self, input: &str) -> Result<Vec<Letter>> {
        let mut letters = Vec::new();
        for token in input.split([' ', '\t', '*']).filter(|t| !t.is_empty()) {
            if token == "1" {
                continue;
            }
            let (name, exp) = match token.split_once('^') {
                None => (token, 1i64),
                Some((name, e)) => (
                    name,
                    e.parse::<i64>().map_err(|_| Error::BadWord {
                        input: input.into(),
                        reason: format!("bad exponent in `{token}`"),
                    })?,
                ),
            };
            let &gen = self
                .name_index
                .get(name)
                .ok_or_else(|| Error::UnknownSymbol {
                    symbol: name.into(),
                })?;
            let letter = Letter { gen, inv: exp < 0 };
            letters.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
        }
        Ok(letters)
    }

    pub fn format_element(&self, e: &Element) -> String {
        self.format_letters(&e.word)
    }

    fn format_letters(&self, word: &[Letter]) -> String {
        if word.is_empty() {
            return "1".into();
        }
        // Run-length collapse repeated letters into name^k.
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < word.len() {
            let l = word[i];
            let mut j = i + 1;
            while j < word.len() && word[j] == l {
                j += 1;
            }
            let count = (j - i) as i64;
            let name = &self.gen_names[l.gen as usize];
            let exp = if l.inv { -count } else { count };
            if exp == 1 {
                parts.push(name.clone());
            } else {
                parts.push(format!("{name}^{exp}"));
            }
            i = j;
        }
        parts.join(" ")
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            GroupKind::Free { rank } => write!(f, "free({rank})"),
            GroupKind::FreeAbelian { rank } => write!(f, "free-abelian({rank})"),
            GroupKind::FreeProduct { factors } => {
                let parts: Vec<String> = factors.iter().map(|x| x.to_string()).collect();
                write!(f, "free-product({})", parts.join(", "))
            }
            GroupKind::DirectProduct { factors } => {
                let parts: Vec<String> = factors.iter().map(|x| x.to_string()).collect();
                write!(f, "direct-product({})", parts.join(", "))
            }
            GroupKind::Rewriting { system } => {
                write!(f, "rewriting({} rules)", system.rule_count())
            }
        }
    }
}

/// JSON file schema for group specifications.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GroupFileSpec {
    Free {
        rank: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        generator_names: Option<Vec<String>>,
    },
    FreeAbelian {
        rank: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        generator_names: Option<Vec<String>>,
    },
    FreeProduct {
        factors: Vec<GroupFileSpec>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        generator_names: Option<Vec<String>>,
    },
    DirectProduct {
        factors: Vec<GroupFileSpec>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        generator_names: Option<Vec<String>>,
    },
    Rewriting {
        generators: Vec<String>,
        rules: Vec<(String, String)>,
    },
}

impl GroupFileSpec {
    pub fn to_spec(&self) -> Result<GroupSpec> {
        let with_names = |spec: GroupSpec, names: &Option<Vec<String>>| match names {
            Some(n) => spec.with_generator_names(n.clone()),
            None => Ok(spec),
        };
        match self {
            GroupFileSpec::Free {
                rank,
                generator_names,
            } => with_names(GroupSpec::free(*rank)?, generator_names),
            GroupFileSpec::FreeAbelian {
                rank,
                generator_names,
            } => with_names(GroupSpec::free_abelian(*rank)?, generator_names),
            GroupFileSpec::FreeProduct {
                factors,
                generator_names,
            } => {
                let fs: Result<Vec<_>> = factors.iter().map(|f| f.to_spec()).collect();
                with_names(GroupSpec::free_product(fs?)?, generator_names)
            }
            GroupFileSpec::DirectProduct {
                factors,
                generator_names,
            } => {
                let fs: Result<Vec<_>> = factors.iter().map(|f| f.to_spec()).collect();
                with_names(GroupSpec::direct_product(fs?)?, generator_names)
            }
            GroupFileSpec::Rewriting { generators, rules } => {
                GroupSpec::rewriting(generators.clone(), rules)
            }
        }
    }

    /// Parses a JSON document; parse errors carry line and column.
    pub fn from_json(text: &str) -> Result<GroupFileSpec> {
        serde_json::from_str(text).map_err(|e| {
            Error::Config(format!(
                "group spec parse error at line {}, column {}: {e}",
                e.line(),
                e.column()
            ))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(spec: &GroupSpec, w: &str) -> Element {
        spec.parse_word(w).unwrap()
    }

    #[test]
    fn free_reduction() {
        let f2 = GroupSpec::free(2).unwrap();
        assert_eq!(el(&f2, "a a^-1 b"), el(&f2, "b"));
        assert_eq!(f2.format_element(&el(&f2, "a a^-1 b")), "b");
        assert_eq!(el(&f2, "a b b^-1 a^-1"), f2.identity());
    }

    #[test]
    fn abelian_commutation() {
        let z2 = GroupSpec::free_abelian(2).unwrap();
        let names = vec!["x".to_string(), "y".to_string()];
        let z2 = z2.with_generator_names(names).unwrap();
        assert_eq!(el(&z2, "x y x^-1"), el(&z2, "y"));
        assert_eq!(z2.format_element(&el(&z2, "y x^3 y")), "x^3 y^2");
        assert_eq!(el(&z2, "x^2 y^-1").len(), 3);
    }

    #[test]
    fn free_product_syllables() {
        // free-product(Z, Z^2): generators a | b, c
        let zp = GroupSpec::free_product(vec![
            GroupSpec::free(1).unwrap(),
            GroupSpec::free_abelian(2).unwrap(),
        ])
        .unwrap();
        assert_eq!(zp.generator_names(), &["a", "b", "c"]);
        assert_eq!(zp.format_element(&el(&zp, "a b a^-1 a")), "a b");
        // syllable merge across a cancelled middle syllable
        assert_eq!(zp.format_element(&el(&zp, "b a a^-1 c")), "b c");
        assert_eq!(el(&zp, "a b a b^-1").len(), 4);
    }

    #[test]
    fn direct_product_splits() {
        let d = GroupSpec::direct_product(vec![
            GroupSpec::free(1).unwrap(),
            GroupSpec::free(1).unwrap(),
        ])
        .unwrap();
        assert_eq!(d.format_element(&el(&d, "b a b")), "a b^2");
        assert_eq!(el(&d, "b a b^-1"), el(&d, "a"));
    }

    #[test]
    fn normal_form_is_idempotent_and_multiplicative() {
        let f2 = GroupSpec::free(2).unwrap();
        let u = el(&f2, "a b a^-1");
        let v = el(&f2, "a b");
        let again = f2.normal_form(u.word());
        assert_eq!(u, again);
        // normal_form(u.v) depends only on normal forms
        let uv = f2.mul(&u, &v);
        assert_eq!(f2.format_element(&uv), "a b^2");
        assert_eq!(uv, el(&f2, "a b a^-1 a b"));
    }

    #[test]
    fn distance_via_normal_forms() {
        let z2 = GroupSpec::free_abelian(2).unwrap();
        let a = el(&z2, "a^2");
        let b = el(&z2, "b^2");
        assert_eq!(z2.distance(&a, &b), 4);
        assert_eq!(z2.distance(&a, &a), 0);
    }

    #[test]
    fn unknown_symbol_is_an_input_error() {
        let f2 = GroupSpec::free(2).unwrap();
        assert!(matches!(
            f2.parse_word("a q"),
            Err(Error::UnknownSymbol { .. })
        ));
    }

    #[test]
    fn shortlex_order() {
        let f2 = GroupSpec::free(2).unwrap();
        let mut v = vec![el(&f2, "b"), el(&f2, "a a"), el(&f2, "a^-1"), el(&f2, "a")];
        v.sort();
        let shown: Vec<String> = v.iter().map(|e| f2.format_element(e)).collect();
        assert_eq!(shown, vec!["a", "a^-1", "b", "a^2"]);
    }

    #[test]
    fn group_file_spec_round_trip() {
        let text = r#"{ "kind": "free-product",
                        "factors": [ { "kind": "free", "rank": 1 },
                                     { "kind": "free-abelian", "rank": 2 } ] }"#;
        let file = GroupFileSpec::from_json(text).unwrap();
        let spec = file.to_spec().unwrap();
        assert_eq!(spec.generator_count(), 3);
        let bad = GroupFileSpec::from_json("{ \"kind\": \"free\" }");
        assert!(matches!(bad, Err(Error::Config(msg)) if msg.contains("line")));
    }
}
