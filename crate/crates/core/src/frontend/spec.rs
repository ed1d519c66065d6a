//! Line-oriented action spec documents.
//!
//! ```text
//! # scaling
//! group: a, b
//! ideal: a*b - 1
//! identity: a = 1, b = 1
//! space: x, y
//! action: X = a*x, Y = a*y
//! section: X - 1
//! order: lex(Y>X)
//! ```
//!
//! Items are separated by commas. A line starting with whitespace continues
//! the previous section. `jets: k` prolongs a planar action to `J^k`; the
//! jet coordinates `y_1..y_k` and `Y_1..Y_k` are then declared implicitly.
//! `pair: f, g` names a classifying pair over the source jet coordinates.

use std::collections::HashSet;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::invariants::{AlgebraicGroupAction, CrossSection};
use crate::poly::{
    BigRational, MonomialOrder, Polynomial, RationalFunction, Table, VarRole, VarTable,
};
use crate::signature::{jet_name, prolong_action, ClassifyingPair, JetContext};

use super::expr::{parse_polynomial_at, parse_rational_at};
use super::order::{parse_order_at, OrderDescriptor};

const KEYS: [&str; 10] = [
    "group", "ideal", "identity", "inverse", "space", "action", "section", "order", "jets", "pair",
];

#[derive(Debug, Clone, PartialEq)]
pub struct ActionSpecDocument {
    pub group_vars: Vec<String>,
    pub group_ideal: Vec<Polynomial>,
    pub identity: Vec<BigRational>,
    pub inverse: Option<Vec<RationalFunction>>,
    pub space_vars: Vec<String>,
    pub target_vars: Vec<String>,
    pub action: Vec<RationalFunction>,
    pub cross_section: Option<Vec<Polynomial>>,
    pub order: Option<OrderDescriptor>,
    pub jet_order: Option<usize>,
    pub pair: Option<(RationalFunction, RationalFunction)>,
}

/// Which variables an `order:` line ranks.
#[derive(Debug, Clone, PartialEq)]
pub enum OrderScope {
    /// Target variables only: the order on `Z` for `O^e` and `I^e`.
    Targets(MonomialOrder),
    /// Every variable of the action ideal except the auxiliary one: an
    /// order for displaying the reduced basis of `A`.
    Full(MonomialOrder),
}

struct Item {
    text: String,
    line: usize,
    col: usize,
}

struct Section {
    line: usize,
    items: Vec<Item>,
}

fn spec_err<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Spec {
        line,
        message: message.into(),
    })
}

/// Undeclared identifiers are spec errors; other syntax errors keep their
/// line and column.
fn located(e: Error) -> Error {
    match e {
        Error::Syntax {
            line,
            column,
            message,
        } if message.starts_with("unknown identifier") => Error::Spec {
            line,
            message: format!(
                "column {column}: undeclared identifier {}",
                message.trim_start_matches("unknown identifier ")
            ),
        },
        other => other,
    }
}

fn split_items(rest: &str, line: usize, col0: usize, out: &mut Vec<Item>) {
    let mut start = 0;
    let chars: Vec<char> = rest.chars().collect();
    for i in 0..=chars.len() {
        if i == chars.len() || chars[i] == ',' {
            let raw: String = chars[start..i].iter().collect();
            let lead = raw.chars().take_while(|c| c.is_whitespace()).count();
            let text = raw.trim().to_string();
            if !text.is_empty() {
                out.push(Item {
                    text,
                    line,
                    col: col0 + start + lead,
                });
            }
            start = i + 1;
        }
    }
}

fn sections(text: &str) -> Result<Vec<(String, Section)>> {
    let mut out: Vec<(String, Section)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        if content.starts_with(char::is_whitespace) {
            let Some((_, sec)) = out.last_mut() else {
                return spec_err(line, "continuation line before any section");
            };
            split_items(content, line, 1, &mut sec.items);
            continue;
        }
        let Some(colon) = content.find(':') else {
            return spec_err(line, "expected `key: items`");
        };
        let key = content[..colon].trim();
        if !KEYS.contains(&key) {
            return spec_err(line, format!("unknown section `{key}`"));
        }
        if out.iter().any(|(k, _)| k == key) {
            return spec_err(line, format!("section `{key}` given twice"));
        }
        let mut sec = Section {
            line,
            items: Vec::new(),
        };
        let rest = &content[colon + 1..];
        split_items(
            rest,
            line,
            content[..colon + 1].chars().count() + 1,
            &mut sec.items,
        );
        out.push((key.to_string(), sec));
    }
    Ok(out)
}

fn ident_ok(s: &str) -> bool {
    let mut c = s.chars();
    c.next().is_some_and(|c| c.is_ascii_alphabetic())
        && c.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn names(sec: &Section) -> Result<Vec<String>> {
    sec.items
        .iter()
        .map(|it| {
            if ident_ok(&it.text) {
                Ok(it.text.clone())
            } else {
                spec_err(it.line, format!("`{}` is not a variable name", it.text))
            }
        })
        .collect()
}

/// `name = expr` with the column of `expr`.
fn binding(it: &Item) -> Result<(String, String, usize)> {
    let Some(eq) = it.text.find('=') else {
        return spec_err(
            it.line,
            format!("expected `name = expression`, found `{}`", it.text),
        );
    };
    let name = it.text[..eq].trim().to_string();
    if !ident_ok(&name) {
        return spec_err(it.line, format!("`{name}` is not a variable name"));
    }
    let rhs = &it.text[eq + 1..];
    let lead = rhs.chars().take_while(|c| c.is_whitespace()).count();
    Ok((
        name,
        rhs.trim().to_string(),
        it.col + it.text[..eq + 1].chars().count() + lead,
    ))
}

/// Bindings for exactly the variables in `vars`, returned in that order.
fn bindings_for(sec: &Section, vars: &[String], what: &str) -> Result<Vec<(String, usize, usize)>> {
    let mut slots: Vec<Option<(String, usize, usize)>> = vec![None; vars.len()];
    for it in &sec.items {
        let (name, rhs, col) = binding(it)?;
        let Some(k) = vars.iter().position(|v| *v == name) else {
            return spec_err(
                it.line,
                format!("{what} binds `{name}`, which is not declared"),
            );
        };
        if slots[k].is_some() {
            return spec_err(it.line, format!("{what} binds `{name}` twice"));
        }
        slots[k] = Some((rhs, it.line, col));
    }
    slots
        .into_iter()
        .zip(vars)
        .map(|(s, v)| {
            s.ok_or_else(|| Error::Spec {
                line: sec.line,
                message: format!("{what} misses `{v}`"),
            })
        })
        .collect()
}

impl ActionSpecDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let secs = sections(text)?;
        let get = |k: &str| secs.iter().find(|(key, _)| key == k).map(|(_, s)| s);
        let need = |k: &str| {
            get(k).ok_or_else(|| Error::Spec {
                line: 0,
                message: format!("missing section `{k}`"),
            })
        };

        let group_vars = names(need("group")?)?;
        let space_sec = need("space")?;
        let space_vars = names(space_sec)?;
        let action_sec = need("action")?;
        let jet_order = match get("jets") {
            None => None,
            Some(sec) => match sec.items.as_slice() {
                [it] => match it.text.parse::<usize>() {
                    Ok(k) if k >= 1 => Some(k),
                    _ => return spec_err(it.line, "jets needs a positive integer"),
                },
                _ => return spec_err(sec.line, "jets needs a single positive integer"),
            },
        };

        let mut target_vars = Vec::new();
        let mut action_src = Vec::new();
        for it in &action_sec.items {
            let (name, rhs, col) = binding(it)?;
            target_vars.push(name);
            action_src.push((rhs, it.line, col));
        }
        if target_vars.len() != space_vars.len() {
            return spec_err(
                action_sec.line,
                format!(
                    "{} space variables but {} action components",
                    space_vars.len(),
                    target_vars.len()
                ),
            );
        }
        if jet_order.is_some() && space_vars.len() != 2 {
            return spec_err(
                get("jets").map_or(0, |s| s.line),
                "jets need a planar action (two space variables)",
            );
        }

        let mut declared: HashSet<String> = HashSet::new();
        let mut all = Vec::new();
        all.extend(
            group_vars
                .iter()
                .map(|v| (v.clone(), need("group").map(|s| s.line).unwrap_or(0))),
        );
        all.extend(space_vars.iter().map(|v| (v.clone(), space_sec.line)));
        all.extend(target_vars.iter().map(|v| (v.clone(), action_sec.line)));
        if let Some(k) = jet_order {
            for j in 1..=k {
                all.push((jet_name(&space_vars[1], j), space_sec.line));
                all.push((jet_name(&target_vars[1], j), action_sec.line));
            }
        }
        for (v, line) in &all {
            if !declared.insert(v.clone()) {
                return spec_err(*line, format!("`{v}` is declared more than once"));
            }
        }

        let group_table = VarTable::with_role(group_vars.clone(), VarRole::GroupParam)?;
        let action_table = VarTable::new(
            group_vars
                .iter()
                .map(|v| (v.clone(), VarRole::GroupParam))
                .chain(space_vars.iter().map(|v| (v.clone(), VarRole::Source))),
        )?;

        let group_ideal = match get("ideal") {
            None => Vec::new(),
            Some(sec) => sec
                .items
                .iter()
                .map(|it| {
                    parse_polynomial_at(&it.text, &group_table, it.line, it.col).map_err(located)
                })
                .collect::<Result<Vec<_>>>()?,
        };

        let id_sec = need("identity")?;
        let mut identity = Vec::new();
        for (rhs, line, col) in bindings_for(id_sec, &group_vars, "identity")? {
            let v = parse_rational_at(&rhs, &group_table, line, col).map_err(located)?;
            match v.constant_value() {
                Some(c) => identity.push(c),
                None => return spec_err(line, format!("identity value `{rhs}` is not a number")),
            }
        }
        for g in &group_ideal {
            if !g.evaluate(&identity).is_zero() {
                return spec_err(
                    id_sec.line,
                    format!("identity does not satisfy the ideal generator {g}"),
                );
            }
        }

        let inverse = match get("inverse") {
            None => None,
            Some(sec) => Some(
                bindings_for(sec, &group_vars, "inverse")?
                    .into_iter()
                    .map(|(rhs, line, col)| {
                        parse_rational_at(&rhs, &group_table, line, col).map_err(located)
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
        };

        let action = action_src
            .iter()
            .map(|(rhs, line, col)| {
                parse_rational_at(rhs, &action_table, *line, *col).map_err(located)
            })
            .collect::<Result<Vec<_>>>()?;

        let mut doc = ActionSpecDocument {
            group_vars,
            group_ideal,
            identity,
            inverse,
            space_vars,
            target_vars,
            action,
            cross_section: None,
            order: None,
            jet_order,
            pair: None,
        };
        doc.base_action().map_err(|e| match e {
            Error::InvalidAction(m) => {
                Error::InvalidAction(format!("line {}: {m}", action_sec.line))
            }
            other => other,
        })?;

        let targets = doc.full_target_names();
        let target_table = VarTable::with_role(targets.clone(), VarRole::Target)?;
        if let Some(sec) = get("section") {
            let gens = sec
                .items
                .iter()
                .map(|it| {
                    parse_polynomial_at(&it.text, &target_table, it.line, it.col).map_err(located)
                })
                .collect::<Result<Vec<_>>>()?;
            doc.cross_section = Some(gens);
        }
        if let Some(sec) = get("order") {
            let text = sec
                .items
                .iter()
                .map(|i| i.text.as_str())
                .collect::<Vec<_>>()
                .join(",");
            let col = sec.items.first().map_or(1, |i| i.col);
            let d = parse_order_at(&text, sec.line, col)?;
            doc.order = Some(d);
            doc.order_scope().map_err(|e| Error::Spec {
                line: sec.line,
                message: e.to_string(),
            })?;
        }
        if let Some(sec) = get("pair") {
            let Some(k) = jet_order else {
                return spec_err(sec.line, "pair needs a `jets:` section");
            };
            let ctx = JetContext::new(&doc.space_vars[0], &doc.space_vars[1], k)?;
            let fs = sec
                .items
                .iter()
                .map(|it| {
                    parse_rational_at(&it.text, ctx.table(), it.line, it.col).map_err(located)
                })
                .collect::<Result<Vec<_>>>()?;
            match <[RationalFunction; 2]>::try_from(fs) {
                Ok([f, g]) => {
                    ClassifyingPair::new(ctx, f.clone(), g.clone()).map_err(|e| Error::Spec {
                        line: sec.line,
                        message: e.to_string(),
                    })?;
                    doc.pair = Some((f, g));
                }
                Err(_) => return spec_err(sec.line, "pair needs exactly two expressions"),
            }
        }
        Ok(doc)
    }

    /// Document for an existing (unprolonged) action.
    pub fn from_action(act: &AlgebraicGroupAction) -> Result<Self> {
        let g = act.group_table()?;
        Ok(ActionSpecDocument {
            group_vars: act.group_names(),
            group_ideal: act
                .group_ideal()
                .iter()
                .map(|p| p.embed(&g))
                .collect::<Result<Vec<_>>>()?,
            identity: act.identity().to_vec(),
            inverse: match act.inverse() {
                Some(inv) => Some(
                    inv.iter()
                        .map(|f| f.embed(&g))
                        .collect::<Result<Vec<_>>>()?,
                ),
                None => None,
            },
            space_vars: act.source_names(),
            target_vars: act.target_names().to_vec(),
            action: act.components().to_vec(),
            cross_section: None,
            order: None,
            jet_order: None,
            pair: None,
        })
    }

    fn full_target_names(&self) -> Vec<String> {
        let mut t = self.target_vars.clone();
        if let Some(k) = self.jet_order {
            t.extend((1..=k).map(|j| jet_name(&self.target_vars[1], j)));
        }
        t
    }

    /// The declared action before any prolongation.
    pub fn base_action(&self) -> Result<AlgebraicGroupAction> {
        AlgebraicGroupAction::new(
            &self.group_vars,
            &self.space_vars,
            &self.target_vars,
            self.group_ideal.clone(),
            self.identity.clone(),
            self.action.clone(),
            self.inverse.clone(),
        )
    }

    /// The action the document describes, prolonged to `J^k` when `jets: k`.
    pub fn action(&self) -> Result<AlgebraicGroupAction> {
        let act = self.base_action()?;
        match self.jet_order {
            Some(k) => prolong_action(&act, k),
            None => Ok(act),
        }
    }

    pub fn cross_section(&self, act: &AlgebraicGroupAction) -> Result<Option<CrossSection>> {
        match &self.cross_section {
            None => Ok(None),
            Some(gens) => {
                let t = act.target_table()?;
                let gens = gens
                    .iter()
                    .map(|g| g.embed(&t))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Some(CrossSection::new(act, gens)?))
            }
        }
    }

    /// Classifies the `order:` line by the variables it ranks.
    pub fn order_scope(&self) -> Result<Option<OrderScope>> {
        let Some(d) = &self.order else {
            return Ok(None);
        };
        order_scope(d, self)
    }

    pub fn classifying_pair(&self) -> Result<Option<ClassifyingPair>> {
        let (Some((f, g)), Some(k)) = (&self.pair, self.jet_order) else {
            return Ok(None);
        };
        let ctx = JetContext::new(&self.space_vars[0], &self.space_vars[1], k)?;
        Ok(Some(ClassifyingPair::new(ctx, f.clone(), g.clone())?))
    }
}

/// Resolves an order descriptor against a document: either the targets
/// (with jets) or group, space and targets together.
pub fn order_scope(d: &OrderDescriptor, doc: &ActionSpecDocument) -> Result<Option<OrderScope>> {
    let ranked: HashSet<&String> = d.names().collect();
    let targets = doc.full_target_names();
    if ranked.len() == targets.len() && targets.iter().all(|t| ranked.contains(t)) {
        let t = VarTable::with_role(targets, VarRole::Target)?;
        return Ok(Some(OrderScope::Targets(d.resolve(&t)?)));
    }
    let mut full: Vec<String> = doc.group_vars.clone();
    full.extend(doc.space_vars.iter().cloned());
    if let Some(k) = doc.jet_order {
        full.extend((1..=k).map(|j| jet_name(&doc.space_vars[1], j)));
    }
    full.extend(targets);
    if ranked.len() == full.len() && full.iter().all(|t| ranked.contains(t)) {
        let t = VarTable::with_role(full, VarRole::Auxiliary)?;
        return Ok(Some(OrderScope::Full(d.resolve(&t)?)));
    }
    Err(Error::mismatch(format!(
        "order `{d}` must rank either the target variables or all group, space and target variables"
    )))
}

fn strings<T: fmt::Display>(xs: &[T]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn bound<T: fmt::Display>(names: &[String], xs: &[T]) -> Vec<String> {
    names
        .iter()
        .zip(xs)
        .map(|(n, x)| format!("{n} = {x}"))
        .collect()
}

fn rational(q: &BigRational) -> String {
    crate::poly::render::rational_to_string(q)
}

/// `key: a, b` on one line, or one item per indented line when long.
fn section_line(f: &mut fmt::Formatter<'_>, key: &str, items: &[String]) -> fmt::Result {
    let one = format!("{key}: {}", items.join(", "));
    if one.len() <= 100 {
        return writeln!(f, "{one}");
    }
    writeln!(f, "{key}:")?;
    for (i, it) in items.iter().enumerate() {
        let sep = if i + 1 < items.len() { "," } else { "" };
        writeln!(f, "  {it}{sep}")?;
    }
    Ok(())
}

/// Canonical text; [`ActionSpecDocument::parse`] reads it back unchanged.
impl fmt::Display for ActionSpecDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        section_line(f, "group", &self.group_vars)?;
        if !self.group_ideal.is_empty() {
            section_line(f, "ideal", &strings(&self.group_ideal))?;
        }
        let id: Vec<String> = self.identity.iter().map(rational).collect();
        section_line(f, "identity", &bound(&self.group_vars, &id))?;
        if let Some(inv) = &self.inverse {
            section_line(f, "inverse", &bound(&self.group_vars, inv))?;
        }
        section_line(f, "space", &self.space_vars)?;
        section_line(f, "action", &bound(&self.target_vars, &self.action))?;
        if let Some(k) = self.jet_order {
            writeln!(f, "jets: {k}")?;
        }
        if let Some(cs) = &self.cross_section {
            section_line(f, "section", &strings(cs))?;
        }
        if let Some(o) = &self.order {
            writeln!(f, "order: {o}")?;
        }
        if let Some((a, b)) = &self.pair {
            section_line(f, "pair", &[a.to_string(), b.to_string()])?;
        }
        Ok(())
    }
}

/// Tables used by a document, for parsing extra expressions against it.
impl ActionSpecDocument {
    pub fn source_table(&self) -> Result<Table> {
        let mut v = self.space_vars.clone();
        if let Some(k) = self.jet_order {
            v.extend((1..=k).map(|j| jet_name(&self.space_vars[1], j)));
        }
        VarTable::with_role(v, VarRole::Source)
    }

    pub fn target_table(&self) -> Result<Table> {
        VarTable::with_role(self.full_target_names(), VarRole::Target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SCALING: &str = "# scaling\ngroup: a, b\nideal: a*b - 1\nidentity: a = 1, b = 1\nspace: x, y\naction: X = a*x, Y = a*y\n";

    #[test]
    fn scaling_round_trip() {
        let d = ActionSpecDocument::parse(SCALING).unwrap();
        assert_eq!(d.target_vars, vec!["X", "Y"]);
        let printed = d.to_string();
        assert_eq!(printed, SCALING.trim_start_matches("# scaling\n"));
        assert_eq!(ActionSpecDocument::parse(&printed).unwrap(), d);
    }

    #[test]
    fn identity_must_satisfy_ideal() {
        let bad = SCALING.replace("a = 1", "a = 2");
        assert!(matches!(
            ActionSpecDocument::parse(&bad),
            Err(Error::Spec { line: 4, .. })
        ));
    }

    #[test]
    fn undeclared_identifier() {
        let bad = SCALING.replace("Y = a*y", "Y = a*z");
        match ActionSpecDocument::parse(&bad) {
            Err(Error::Spec { line: 6, message }) => assert!(message.contains("`z`"), "{message}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn continuation_lines_and_comments() {
        let text = "group: c, s, a, b\nideal:\n  c^2 + s^2 - 1  # circle\nidentity: c = 1, s = 0, a = 0, b = 0\nspace: x, y\naction: X = c*x - s*y + a,\n        Y = s*x + c*y + b\njets: 3\n";
        let d = ActionSpecDocument::parse(text).unwrap();
        assert_eq!(d.group_ideal.len(), 1);
        assert_eq!(d.jet_order, Some(3));
        assert_eq!(d.action().unwrap().target_names().len(), 5);
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(
            ActionSpecDocument::parse("group: a\n"),
            Err(Error::Spec { .. })
        ));
        let dup = format!("{SCALING}space: u\n");
        assert!(matches!(
            ActionSpecDocument::parse(&dup),
            Err(Error::Spec { line: 7, .. })
        ));
        let unknown = format!("{SCALING}colour: red\n");
        assert!(matches!(
            ActionSpecDocument::parse(&unknown),
            Err(Error::Spec { line: 7, .. })
        ));
        let clash = SCALING.replace("X = a*x", "a = a*x");
        assert!(matches!(
            ActionSpecDocument::parse(&clash),
            Err(Error::Spec { .. })
        ));
        let syntax = SCALING.replace("a*x", "a**x");
        assert!(matches!(
            ActionSpecDocument::parse(&syntax),
            Err(Error::Syntax { line: 6, .. })
        ));
    }

    #[test]
    fn order_classification() {
        let z = format!("{SCALING}order: lex(Y>X)\n");
        let d = ActionSpecDocument::parse(&z).unwrap();
        assert!(matches!(
            d.order_scope().unwrap(),
            Some(OrderScope::Targets(_))
        ));
        let full = format!("{SCALING}order: lex(b>a>y>x>Y>X)\n");
        let d = ActionSpecDocument::parse(&full).unwrap();
        assert!(matches!(
            d.order_scope().unwrap(),
            Some(OrderScope::Full(_))
        ));
        let partial = format!("{SCALING}order: lex(a>b)\n");
        assert!(matches!(
            ActionSpecDocument::parse(&partial),
            Err(Error::Spec { line: 7, .. })
        ));
    }
}
