use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{BlockKind, MonomialOrder, OrderKind, Table};

/// A parsed order descriptor, still in terms of variable names:
/// `lex(b>a>x)`, `degrevlex(x>y)` or `block([a,b],[x,y])`, where block
/// arguments may also be `lex(..)` / `degrevlex(..)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderDescriptor {
    pub kind: OrderKind,
    pub blocks: Vec<(BlockKind, Vec<String>)>,
}

impl OrderDescriptor {
    pub fn names(&self) -> impl Iterator<Item = &String> {
        self.blocks.iter().flat_map(|(_, b)| b.iter())
    }

    /// The order over `table`; every variable of the table must be ranked
    /// exactly once.
    pub fn resolve(&self, table: &Table) -> Result<MonomialOrder> {
        let mut blocks = Vec::with_capacity(self.blocks.len());
        for (k, names) in &self.blocks {
            let idx = names
                .iter()
                .map(|n| {
                    table.index_of(n).ok_or_else(|| {
                        Error::mismatch(format!("order mentions unknown variable {n}"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            blocks.push((*k, idx));
        }
        let count: usize = blocks.iter().map(|(_, b)| b.len()).sum();
        if count != table.len() {
            return Err(Error::mismatch(format!(
                "order ranks {count} variables, expected {}: {}",
                table.len(),
                table.names().join(", ")
            )));
        }
        match self.kind {
            OrderKind::Lex => MonomialOrder::lex(blocks.remove(0).1),
            OrderKind::DegRevLex => MonomialOrder::degrevlex(blocks.remove(0).1),
            OrderKind::Block => MonomialOrder::product(blocks),
        }
    }

    pub fn from_order(order: &MonomialOrder, table: &Table) -> Self {
        let blocks = order
            .blocks()
            .iter()
            .map(|(k, b)| (*k, b.iter().map(|&v| table.name(v).to_string()).collect()))
            .collect();
        OrderDescriptor {
            kind: order.kind(),
            blocks,
        }
    }
}

impl fmt::Display for OrderDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let single = |k: BlockKind, b: &[String]| match k {
            BlockKind::Lex => format!("lex({})", b.join(">")),
            BlockKind::DegRevLex => format!("degrevlex({})", b.join(">")),
        };
        match self.kind {
            OrderKind::Lex | OrderKind::DegRevLex => {
                let (k, b) = &self.blocks[0];
                write!(f, "{}", single(*k, b))
            }
            OrderKind::Block => {
                let parts: Vec<String> = self
                    .blocks
                    .iter()
                    .map(|(k, b)| match k {
                        BlockKind::DegRevLex => format!("[{}]", b.join(",")),
                        BlockKind::Lex => single(*k, b),
                    })
                    .collect();
                write!(f, "block({})", parts.join(","))
            }
        }
    }
}

struct Scanner {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col0: usize,
}

impl Scanner {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            line: self.line,
            column: self.col0 + self.pos,
            message: msg.into(),
        })
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => self.err(format!("expected `{c}`, found `{d}`")),
            None => self.err(format!("expected `{c}`")),
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        match self.chars.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() => {}
            _ => return self.err("expected a variable name"),
        }
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
        {
            self.pos += 1;
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn ranking(&mut self, sep: char, close: char) -> Result<Vec<String>> {
        let mut out = vec![self.ident()?];
        loop {
            match self.peek() {
                Some(c) if c == sep => {
                    self.pos += 1;
                    out.push(self.ident()?);
                }
                Some(c) if c == close => {
                    self.pos += 1;
                    return Ok(out);
                }
                Some(c) => return self.err(format!("unexpected `{c}`")),
                None => return self.err(format!("expected `{close}`")),
            }
        }
    }

    fn single(&mut self, name: &str) -> Result<(BlockKind, Vec<String>)> {
        let kind = match name {
            "lex" => BlockKind::Lex,
            "degrevlex" => BlockKind::DegRevLex,
            other => return self.err(format!("unknown order `{other}`")),
        };
        self.expect('(')?;
        Ok((kind, self.ranking('>', ')')?))
    }
}

/// Parses an order descriptor found at `line`, column `col0`.
pub fn parse_order_at(text: &str, line: usize, col0: usize) -> Result<OrderDescriptor> {
    let mut s = Scanner {
        chars: text.chars().collect(),
        pos: 0,
        line,
        col0,
    };
    let head = s.ident()?;
    let desc = if head == "block" {
        s.expect('(')?;
        let mut blocks = Vec::new();
        loop {
            if s.peek() == Some('[') {
                s.pos += 1;
                blocks.push((BlockKind::DegRevLex, s.ranking(',', ']')?));
            } else {
                let name = s.ident()?;
                blocks.push(s.single(&name)?);
            }
            match s.peek() {
                Some(',') => s.pos += 1,
                Some(')') => {
                    s.pos += 1;
                    break;
                }
                Some(c) => return s.err(format!("unexpected `{c}`")),
                None => return s.err("expected `)`"),
            }
        }
        OrderDescriptor {
            kind: OrderKind::Block,
            blocks,
        }
    } else {
        let b = s.single(&head)?;
        let kind = match b.0 {
            BlockKind::Lex => OrderKind::Lex,
            BlockKind::DegRevLex => OrderKind::DegRevLex,
        };
        OrderDescriptor {
            kind,
            blocks: vec![b],
        }
    };
    if let Some(c) = s.peek() {
        return s.err(format!("unexpected `{c}` after the order"));
    }
    let mut seen = std::collections::HashSet::new();
    for n in desc.names() {
        if !seen.insert(n) {
            return Err(Error::Syntax {
                line,
                column: col0,
                message: format!("variable {n} ranked twice"),
            });
        }
    }
    Ok(desc)
}

pub fn parse_order(text: &str) -> Result<OrderDescriptor> {
    parse_order_at(text, 1, 1)
}
