//! Increasing index strings over `{1..c}` naming the nodes of the
//! column-subset search tree, and the navigation operators on them.
//!
//! Strings compare prefix-first, then at the first differing symbol. That
//! is the depth-first preorder of the tree, e.g. for `c = 3`:
//! `ε, 1, 12, 123, 13, 2, 23, 3`.

use std::fmt;

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SearchString(Vec<usize>);

impl SearchString {
    pub fn empty() -> Self {
        SearchString(Vec::new())
    }

    /// `None` unless the symbols are positive and strictly increasing.
    pub fn new(symbols: Vec<usize>) -> Option<Self> {
        let ok = symbols.first().is_none_or(|&s| s >= 1) && symbols.windows(2).all(|w| w[0] < w[1]);
        ok.then_some(SearchString(symbols))
    }

    /// Parses `"123"`, `"ε"` or `""`. Symbols are single digits.
    pub fn parse(s: &str) -> Option<Self> {
        if s == "ε" {
            return Some(Self::empty());
        }
        let syms = s
            .chars()
            .map(|ch| ch.to_digit(10).map(|d| d as usize))
            .collect::<Option<Vec<_>>>()?;
        Self::new(syms)
    }

    pub fn symbols(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `s⁺`, the last symbol.
    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// `s⁻`, the string without its last symbol.
    pub fn parent(&self) -> Option<SearchString> {
        (!self.0.is_empty()).then(|| SearchString(self.0[..self.0.len() - 1].to_vec()))
    }

    /// Appends `sym`; `None` if the result would not be increasing.
    pub fn child(&self, sym: usize) -> Option<SearchString> {
        if sym == 0 || self.last().is_some_and(|l| l >= sym) {
            return None;
        }
        let mut v = self.0.clone();
        v.push(sym);
        Some(SearchString(v))
    }

    /// `pre(s)`: every prefix, from `ε` up to `s` itself.
    pub fn prefixes(&self) -> Vec<SearchString> {
        (0..=self.0.len())
            .map(|k| SearchString(self.0[..k].to_vec()))
            .collect()
    }

    pub fn is_prefix_of(&self, other: &SearchString) -> bool {
        other.0.starts_with(&self.0)
    }

    /// Length of the longest string in the subtree rooted here.
    pub fn subtree_depth(&self, c: usize) -> usize {
        self.len() + c - self.last().unwrap_or(0)
    }
}

impl fmt::Display for SearchString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        let sep = if self.0.iter().any(|&s| s > 9) {
            ","
        } else {
            ""
        };
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(sep))
    }
}

impl fmt::Debug for SearchString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// The string set for `c` columns with the navigation operators.
#[derive(Debug, Clone)]
pub struct SearchSpace {
    c: usize,
    sorted: Vec<SearchString>,
}

impl SearchSpace {
    pub fn new(c: usize) -> Self {
        let mut sorted = Vec::with_capacity(1 << c);
        let mut stack = vec![SearchString::empty()];
        while let Some(s) = stack.pop() {
            let from = s.last().unwrap_or(0) + 1;
            for sym in (from..=c).rev() {
                stack.push(s.child(sym).expect("increasing by construction"));
            }
            sorted.push(s);
        }
        debug_assert!(sorted.windows(2).all(|w| w[0] < w[1]));
        SearchSpace { c, sorted }
    }

    pub fn columns(&self) -> usize {
        self.c
    }

    /// All strings in ascending order (`2^c` of them, `ε` first).
    pub fn strings(&self) -> &[SearchString] {
        &self.sorted
    }

    /// Strings ending in `c`, ascending.
    pub fn terminals(&self) -> Vec<SearchString> {
        self.sorted
            .iter()
            .filter(|s| s.last() == Some(self.c))
            .cloned()
            .collect()
    }

    pub fn position(&self, s: &SearchString) -> Option<usize> {
        self.sorted.binary_search(s).ok()
    }

    /// `|s, k⟩`: smallest terminal after `s` longer than `k`, else `ε`.
    pub fn ket(&self, s: &SearchString, k: usize) -> SearchString {
        self.sorted
            .iter()
            .find(|t| t.last() == Some(self.c) && *t > s && t.len() > k)
            .cloned()
            .unwrap_or_default()
    }

    /// `|s, s'⟩↓`: smallest prefix of `s'` that is not a prefix of `s`.
    /// `None` when `s'` is itself a prefix of `s`.
    pub fn down(&self, s: &SearchString, s2: &SearchString) -> Option<SearchString> {
        s2.prefixes().into_iter().find(|p| !p.is_prefix_of(s))
    }

    /// `⌈s⌉`: smallest string after `s` outside the subtree of `s`, i.e.
    /// where the search resumes once the subtree of `s` is abandoned.
    pub fn ceil(&self, s: &SearchString) -> Option<SearchString> {
        self.sorted
            .iter()
            .find(|t| *t > s && !s.is_prefix_of(t))
            .cloned()
    }
}
