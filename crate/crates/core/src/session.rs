//! Declarative input files.
//!
//! One declaration per line, `#` starts a comment:
//!
//! ```text
//! ring R : x, s, t, u, v
//! poly p on R : 2*x^3*t - s^2
//! ideal I on R : [x^2 - s, p]
//! derivation D on R : s -> x^3, t -> s, u -> t, v -> x^2
//! quotient-datum Q on Y : ideal = [y1*y4 - y2*y3], f1 = y1, f2 = y2
//! ```
//!
//! `on R` may be omitted, in which case the most recent ring is used.
//! Declared polynomials may appear by name in later expressions.

use std::collections::BTreeMap;
use std::path::Path;

use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::parse::parse_polynomial;
use crate::poly::{Polynomial, Ring};
use crate::quotient::QuasiAffineDatum;

#[derive(Clone, Debug, Default)]
pub struct Session {
    rings: BTreeMap<String, Ring>,
    polys: BTreeMap<String, Polynomial>,
    /// declaration order of `polys`
    poly_order: Vec<String>,
    ideals: BTreeMap<String, Ideal>,
    derivations: BTreeMap<String, Derivation>,
    data: BTreeMap<String, QuasiAffineDatum>,
    last_ring: Option<Ring>,
}

fn input_error(line: usize, e: impl std::fmt::Display) -> Error {
    Error::Input {
        line,
        message: e.to_string(),
    }
}

fn unknown(kind: &str, name: &str) -> Error {
    Error::UnknownIdentifier(format!("{kind} {name}"))
}

/// Splits on commas outside brackets and parentheses.
pub fn split_top_level(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    let last = text[start..].trim();
    if !last.is_empty() || !parts.is_empty() {
        parts.push(last);
    }
    parts
}

impl Session {
    pub fn parse(text: &str) -> Result<Self> {
        let mut session = Session::default();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            session
                .declare(line)
                .map_err(|e| input_error(k + 1, e))?;
        }
        Ok(session)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
        Session::parse(&text)
    }

    fn declare(&mut self, line: &str) -> Result<()> {
        let (head, body) = line
            .split_once(':')
            .ok_or_else(|| Error::Invalid("expected `kind name [on ring] : body`".into()))?;
        let words: Vec<&str> = head.split_whitespace().collect();
        let (kind, name, ring_name) = match words.as_slice() {
            [kind, name] => (*kind, *name, None),
            [kind, name, "on", ring] => (*kind, *name, Some(*ring)),
            _ => return Err(Error::Invalid(format!("malformed declaration head `{}`", head.trim()))),
        };
        if !crate::poly::is_identifier(name) {
            return Err(Error::Invalid(format!("`{name}` is not a valid name")));
        }
        let body = body.trim();
        if kind == "ring" {
            if ring_name.is_some() {
                return Err(Error::Invalid("a ring is not declared on another ring".into()));
            }
            let names: Vec<&str> = split_top_level(body);
            let ring = Ring::new(names)?;
            insert_unique(&mut self.rings, "ring", name, ring.clone())?;
            self.last_ring = Some(ring);
            return Ok(());
        }
        let ring = match ring_name {
            Some(r) => self.ring(r)?.clone(),
            None => self
                .last_ring
                .clone()
                .ok_or_else(|| Error::Invalid("no ring declared yet".into()))?,
        };
        match kind {
            "poly" => {
                let p = self.parse_poly(body, &ring)?;
                insert_unique(&mut self.polys, "poly", name, p)?;
                self.poly_order.push(name.to_string());
            }
            "ideal" => {
                let ideal = self.parse_ideal(body, &ring)?;
                insert_unique(&mut self.ideals, "ideal", name, ideal)?;
            }
            "derivation" => {
                let mut images = vec![Polynomial::zero(&ring); ring.arity()];
                for pair in split_top_level(body) {
                    let (var, image) = pair
                        .split_once("->")
                        .ok_or_else(|| Error::Invalid(format!("expected `var -> image`, got `{pair}`")))?;
                    let i = ring.require(var.trim())?;
                    images[i] = self.parse_poly(image, &ring)?;
                }
                insert_unique(&mut self.derivations, "derivation", name, Derivation::new(&ring, images)?)?;
            }
            "quotient-datum" => {
                let mut y_ideal = None;
                let mut f1 = None;
                let mut f2 = None;
                for field in split_top_level(body) {
                    let (key, value) = field
                        .split_once('=')
                        .ok_or_else(|| Error::Invalid(format!("expected `key = value`, got `{field}`")))?;
                    match key.trim() {
                        "ideal" => y_ideal = Some(self.parse_ideal(value, &ring)?),
                        "f1" => f1 = Some(self.parse_poly(value, &ring)?),
                        "f2" => f2 = Some(self.parse_poly(value, &ring)?),
                        other => return Err(Error::Invalid(format!("unknown datum field `{other}`"))),
                    }
                }
                let missing = |f: &str| Error::Invalid(format!("quotient-datum needs `{f}`"));
                let datum = QuasiAffineDatum::new(
                    y_ideal.unwrap_or_else(|| Ideal::zero(&ring)),
                    f1.ok_or_else(|| missing("f1"))?,
                    f2.ok_or_else(|| missing("f2"))?,
                )?;
                insert_unique(&mut self.data, "quotient-datum", name, datum)?;
            }
            other => return Err(Error::Invalid(format!("unknown declaration kind `{other}`"))),
        }
        Ok(())
    }

    /// Parses `text` on `ring`, resolving names of declared polynomials.
    pub fn parse_poly(&self, text: &str, ring: &Ring) -> Result<Polynomial> {
        let bindings = |name: &str| self.polys.get(name).and_then(|p| p.embed(ring).ok());
        parse_polynomial(text.trim(), ring, &bindings)
    }

    /// `[g1, g2, ...]` or the name of a declared ideal.
    pub fn parse_ideal(&self, text: &str, ring: &Ring) -> Result<Ideal> {
        let text = text.trim();
        if let Some(inner) = text.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| Error::Invalid(format!("unclosed `[` in `{text}`")))?;
            let gens = split_top_level(inner)
                .into_iter()
                .map(|g| self.parse_poly(g, ring))
                .collect::<Result<Vec<_>>>()?;
            Ideal::new(ring, gens)
        } else {
            self.ideal(text)?.embed(ring)
        }
    }

    pub fn ring(&self, name: &str) -> Result<&Ring> {
        self.rings.get(name).ok_or_else(|| unknown("ring", name))
    }

    pub fn poly(&self, name: &str) -> Result<&Polynomial> {
        self.polys.get(name).ok_or_else(|| unknown("poly", name))
    }

    pub fn ideal(&self, name: &str) -> Result<&Ideal> {
        self.ideals.get(name).ok_or_else(|| unknown("ideal", name))
    }

    pub fn derivation(&self, name: &str) -> Result<&Derivation> {
        self.derivations.get(name).ok_or_else(|| unknown("derivation", name))
    }

    pub fn datum(&self, name: &str) -> Result<&QuasiAffineDatum> {
        self.data.get(name).ok_or_else(|| unknown("quotient-datum", name))
    }

    /// Declared polynomials in declaration order.
    pub fn polys(&self) -> impl Iterator<Item = (&str, &Polynomial)> {
        self.poly_order
            .iter()
            .map(|n| (n.as_str(), &self.polys[n]))
    }

    pub fn last_ring(&self) -> Option<&Ring> {
        self.last_ring.as_ref()
    }
}

fn insert_unique<T>(map: &mut BTreeMap<String, T>, kind: &str, name: &str, value: T) -> Result<()> {
    if map.contains_key(name) {
        return Err(Error::Invalid(format!("{kind} `{name}` declared twice")));
    }
    map.insert(name.to_string(), value);
    Ok(())
}
