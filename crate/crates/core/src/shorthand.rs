//! The compact notation `g(μ;ν;λ')` for summands of a complex term, with
//! several last-slot entries sharing the other slots wrapped in one pair of
//! parentheses: `(μ;ν;(λ⊕κ))`.
//!
//! Grammar (whitespace ignored; `\oplus` and `+` accepted for `⊕`):
//!
//! ```text
//! term    := summand ("⊕" summand)*
//! summand := [MULT] "(" slot (";" slot)* ";" wrapped ")"
//! wrapped := slot | "(" slot ("⊕" slot)* ")"
//! slot    := "0" | part ("," part)*      part := INT ("^" INT)?
//! ```

use std::cmp::Ordering;
use std::fmt::{self, Write as _};

use crate::error::{parse_err, Result};
use crate::partition::parse_grouped;

pub const OPLUS: char = '⊕';

/// One summand as written: the weights in each slot (trailing zeros
/// dropped for non-negative weights) and a multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Entry {
    pub slots: Vec<Vec<i64>>,
    pub mult: u64,
}

impl Entry {
    pub fn new(slots: Vec<Vec<i64>>, mult: u64) -> Self {
        Entry {
            slots: slots.into_iter().map(normalize).collect(),
            mult,
        }
    }
}

/// Drops trailing zeros unless some entry is negative.
pub fn normalize(mut v: Vec<i64>) -> Vec<i64> {
    if v.iter().all(|&x| x >= 0) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }
    v
}

/// Lexicographic comparison of weights padded on the right with zeros, so
/// `(1)` and `(1,0,-1)` compare as they would at a common rank.
pub fn cmp_padded(a: &[i64], b: &[i64]) -> Ordering {
    let n = a.len().max(b.len());
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        match x.cmp(&y) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    Ordering::Equal
}

fn cmp_slots(a: &[Vec<i64>], b: &[Vec<i64>]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match cmp_padded(x, y) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

struct Slot<'a>(&'a [i64]);

impl fmt::Display for Slot<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        crate::partition::write_grouped(f, self.0)
    }
}

/// Sorts by `(degree, slots)` and renders the term, wrapping last slots that
/// share all other slots and the multiplicity.
pub fn render_term<F>(entries: &[Entry], degree: F) -> String
where
    F: Fn(&Entry) -> i64,
{
    let mut sorted: Vec<(i64, &Entry)> = entries.iter().map(|e| (degree(e), e)).collect();
    sorted.sort_by(|(da, a), (db, b)| da.cmp(db).then_with(|| cmp_slots(&a.slots, &b.slots)));

    let mut out = String::new();
    let mut i = 0;
    while i < sorted.len() {
        let head = sorted[i].1;
        let k = head.slots.len();
        // The run sharing every slot but the last.
        let mut j = i + 1;
        while j < sorted.len()
            && sorted[j].0 == sorted[i].0
            && sorted[j].1.slots[..k - 1] == head.slots[..k - 1]
        {
            j += 1;
        }
        let run = &sorted[i..j];
        let mut mults: Vec<u64> = Vec::new();
        for (_, e) in run {
            if !mults.contains(&e.mult) {
                mults.push(e.mult);
            }
        }
        for mult in mults {
            let lasts: Vec<&[i64]> = run
                .iter()
                .filter(|(_, e)| e.mult == mult)
                .map(|(_, e)| e.slots[k - 1].as_slice())
                .collect();
            if !out.is_empty() {
                out.push(OPLUS);
            }
            if mult != 1 {
                let _ = write!(out, "{mult}");
            }
            out.push('(');
            for s in &head.slots[..k - 1] {
                let _ = write!(out, "{};", Slot(s));
            }
            if lasts.len() == 1 {
                let _ = write!(out, "{}", Slot(lasts[0]));
            } else {
                out.push('(');
                for (n, s) in lasts.iter().enumerate() {
                    if n > 0 {
                        out.push(OPLUS);
                    }
                    let _ = write!(out, "{}", Slot(s));
                }
                out.push(')');
            }
            out.push(')');
        }
        i = j;
    }
    out
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, reason: impl Into<String>) -> crate::Error {
        parse_err(
            "shorthand",
            self.src,
            format!("{} at {}", reason.into(), self.pos),
        )
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {c:?}")))
        }
    }

    fn slot(&mut self) -> Result<Vec<i64>> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == ',' || c == '^' || c == '-')
        {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        if text.is_empty() {
            return Err(self.err("empty slot"));
        }
        if text == "0" {
            return Ok(Vec::new());
        }
        parse_grouped(&text, "shorthand slot")
    }

    fn summand(&mut self, slots: usize, out: &mut Vec<Entry>) -> Result<()> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let mult = if self.pos == start {
            1
        } else {
            let text: String = self.chars[start..self.pos].iter().collect();
            text.parse().map_err(|_| self.err("bad multiplicity"))?
        };
        self.expect('(')?;
        let mut head = Vec::with_capacity(slots);
        for _ in 0..slots - 1 {
            head.push(self.slot()?);
            self.expect(';')?;
        }
        let lasts = if self.peek() == Some('(') {
            self.pos += 1;
            let mut v = vec![self.slot()?];
            while self.peek() == Some(OPLUS) {
                self.pos += 1;
                v.push(self.slot()?);
            }
            self.expect(')')?;
            v
        } else {
            vec![self.slot()?]
        };
        self.expect(')')?;
        for last in lasts {
            let mut s = head.clone();
            s.push(last);
            out.push(Entry::new(s, mult));
        }
        Ok(())
    }
}

/// Parses a term with `slots` slots per summand into unwrapped entries.
/// The empty string is the zero term.
pub fn parse_term(s: &str, slots: usize) -> Result<Vec<Entry>> {
    assert!(slots >= 1);
    let cleaned: String = s
        .replace("\\oplus", "⊕")
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '+' { OPLUS } else { c })
        .collect();
    let mut p = Parser {
        src: s,
        chars: cleaned.chars().collect(),
        pos: 0,
    };
    let mut out = Vec::new();
    if p.chars.is_empty() {
        return Ok(out);
    }
    loop {
        p.summand(slots, &mut out)?;
        match p.peek() {
            None => break,
            Some(OPLUS) => p.pos += 1,
            Some(_) => return Err(p.err("expected ⊕ or end")),
        }
    }
    Ok(out)
}

/// Re-renders a term in canonical form. Repeated summands are merged into
/// a multiplicity.
pub fn canonicalize<F>(s: &str, slots: usize, degree: F) -> Result<String>
where
    F: Fn(&Entry) -> i64,
{
    let entries = merge(parse_term(s, slots)?);
    Ok(render_term(&entries, degree))
}

/// Adds up multiplicities of identical slot tuples.
pub fn merge(entries: Vec<Entry>) -> Vec<Entry> {
    let mut out: Vec<Entry> = Vec::new();
    for e in entries {
        match out.iter_mut().find(|x| x.slots == e.slots) {
            Some(x) => x.mult += e.mult,
            None => out.push(e),
        }
    }
    out
}

/// Degree of a Kronecker-quiver summand: the size of `λ'`.
pub fn last_slot_size(e: &Entry) -> i64 {
    e.slots.last().map_or(0, |v| v.iter().sum())
}
