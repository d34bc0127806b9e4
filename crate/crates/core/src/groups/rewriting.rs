//! Confluent length-nonincreasing rewriting systems.
//!
//! Each rule must strictly decrease the shortlex order of a word (shorter, or
//! equal length and lexicographically smaller), which guarantees termination.
//! Local confluence is then checked by resolving all critical pairs; with
//! termination this gives global confluence and unique normal forms. Because
//! rules never increase length, the normal form of a word is never longer
//! than the word itself, hence normal forms are geodesic.

use crate::error::{Error, Result};
use crate::groups::Letter;

#[derive(Debug, Clone)]
struct Rule {
    lhs: Vec<Letter>,
    rhs: Vec<Letter>,
}

#[derive(Debug, Clone)]
pub struct RewritingSystem {
    generators: usize,
    rules: Vec<Rule>,
    max_lhs: usize,
}

fn shortlex_less(a: &[Letter], b: &[Letter]) -> bool {
    (a.len(), a) < (b.len(), b)
}

impl RewritingSystem {
    /// Builds and validates a system. `user_rules` are `(lhs, rhs)` letter
    /// words; free-cancellation rules `g g^-1 -> 1` are added automatically.
    /// `show` renders a letter word for error messages.
    pub fn new(
        generators: usize,
        user_rules: Vec<(Vec<Letter>, Vec<Letter>)>,
        show: impl Fn(&[Letter]) -> String,
    ) -> Result<RewritingSystem> {
        let mut rules = Vec::new();
        for gen in 0..generators as u32 {
            for inv in [false, true] {
                let l = Letter { gen, inv };
                rules.push(Rule {
                    lhs: vec![l, l.inverse()],
                    rhs: Vec::new(),
                });
            }
        }
        for (lhs, rhs) in user_rules {
            if lhs.is_empty() {
                return Err(Error::BadGroupSpec("rule with empty left-hand side".into()));
            }
            if !shortlex_less(&rhs, &lhs) {
                return Err(Error::BadGroupSpec(format!(
                    "rule `{} -> {}` does not decrease shortlex order \
                     (rules must be length-nonincreasing, with ties broken lexicographically)",
                    show(&lhs),
                    show(&rhs)
                )));
            }
            rules.push(Rule { lhs, rhs });
        }
        // Deterministic rule application order.
        rules.sort_by(|a, b| (&a.lhs, &a.rhs).cmp(&(&b.lhs, &b.rhs)));
        rules.dedup_by(|a, b| a.lhs == b.lhs && a.rhs == b.rhs);
        let max_lhs = rules.iter().map(|r| r.lhs.len()).max().unwrap_or(1);
        let system = RewritingSystem {
            generators,
            rules,
            max_lhs,
        };
        system.check_local_confluence(&show)?;
        Ok(system)
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn rule_count(&self) -> usize {
        self.rules.len()
    }

    /// Rewrites to the unique irreducible word. Terminates because every
    /// rewrite strictly decreases shortlex order.
    pub fn normalize(&self, word: &[Letter]) -> Vec<Letter> {
        let mut w = word.to_vec();
        let mut i = 0;
        'scan: while i < w.len() {
            for rule in &self.rules {
                let n = rule.lhs.len();
                if i + n <= w.len() && w[i..i + n] == rule.lhs[..] {
                    w.splice(i..i + n, rule.rhs.iter().copied());
                    i = i.saturating_sub(self.max_lhs - 1);
                    continue 'scan;
                }
            }
            i += 1;
        }
        w
    }

    /// Newman's lemma: with termination, resolving all critical pairs decides
    /// confluence. Critical pairs come from one left-hand side contained in
    /// another and from proper overlaps (suffix of one equals prefix of the
    /// other); all candidate words have length at most twice the longest
    /// left-hand side.
    fn check_local_confluence(&self, show: &impl Fn(&[Letter]) -> String) -> Result<()> {
        for r1 in &self.rules {
            for r2 in &self.rules {
                // r2.lhs occurs inside r1.lhs
                if r2.lhs.len() <= r1.lhs.len() {
                    for i in 0..=r1.lhs.len() - r2.lhs.len() {
                        if r1.lhs[i..i + r2.lhs.len()] == r2.lhs[..] {
                            if std::ptr::eq(r1, r2) && i == 0 {
                                continue;
                            }
                            let mut alt = r1.lhs[..i].to_vec();
                            alt.extend_from_slice(&r2.rhs);
                            alt.extend_from_slice(&r1.lhs[i + r2.lhs.len()..]);
                            self.resolve(&r1.rhs, &alt, show)?;
                        }
                    }
                }
                // proper overlap: suffix of r1.lhs = prefix of r2.lhs
                let max_k = r1.lhs.len().min(r2.lhs.len()) - 1;
                for k in 1..=max_k {
                    if r1.lhs[r1.lhs.len() - k..] == r2.lhs[..k] {
                        // word = r1.lhs + r2.lhs[k..]
                        let mut via_r1 = r1.rhs.clone();
                        via_r1.extend_from_slice(&r2.lhs[k..]);
                        let mut via_r2 = r1.lhs[..r1.lhs.len() - k].to_vec();
                        via_r2.extend_from_slice(&r2.rhs);
                        self.resolve(&via_r1, &via_r2, show)?;
                    }
                }
            }
        }
        Ok(())
    }

    fn resolve(
        &self,
        a: &[Letter],
        b: &[Letter],
        show: &impl Fn(&[Letter]) -> String,
    ) -> Result<()> {
        let na = self.normalize(a);
        let nb = self.normalize(b);
        if na != nb {
            return Err(Error::NonConfluent {
                left: show(&na),
                right: show(&nb),
            });
        }
        Ok(())
    }
}
