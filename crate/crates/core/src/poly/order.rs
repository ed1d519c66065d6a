use std::cmp::Ordering;

use super::monomial::Monomial;
use super::vars::VarTable;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    DegRevLex,
    Block,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    Lex,
    DegRevLex,
}

/// A monomial order given by a ranking of the variables (highest first).
///
/// Every order is stored as a product of blocks. Within a block monomials
/// are compared by lex or degrevlex on the block's ranking; the first block
/// that distinguishes two monomials decides. `Lex` and `DegRevLex` are the
/// single-block cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    blocks: Vec<(BlockKind, Vec<usize>)>,
    nvars: usize,
}

impl MonomialOrder {
    pub fn lex(ranking: Vec<usize>) -> Result<Self> {
        Self::build(OrderKind::Lex, vec![(BlockKind::Lex, ranking)])
    }

    pub fn degrevlex(ranking: Vec<usize>) -> Result<Self> {
        Self::build(OrderKind::DegRevLex, vec![(BlockKind::DegRevLex, ranking)])
    }

    /// Block order: earlier blocks are eliminated first. Each block is
    /// compared with degrevlex.
    pub fn block(blocks: Vec<Vec<usize>>) -> Result<Self> {
        Self::build(
            OrderKind::Block,
            blocks
                .into_iter()
                .map(|b| (BlockKind::DegRevLex, b))
                .collect(),
        )
    }

    /// Product of arbitrary lex / degrevlex blocks.
    pub fn product(blocks: Vec<(BlockKind, Vec<usize>)>) -> Result<Self> {
        Self::build(OrderKind::Block, blocks)
    }

    /// Degrevlex in table order, the internal canonical order.
    pub fn internal(nvars: usize) -> Self {
        Self::degrevlex((0..nvars).collect()).expect("identity ranking")
    }

    pub fn lex_by_names(table: &VarTable, ranking: &[&str]) -> Result<Self> {
        Self::lex(Self::resolve(table, ranking)?)
    }

    pub fn degrevlex_by_names(table: &VarTable, ranking: &[&str]) -> Result<Self> {
        Self::degrevlex(Self::resolve(table, ranking)?)
    }

    fn resolve(table: &VarTable, ranking: &[&str]) -> Result<Vec<usize>> {
        ranking.iter().map(|n| table.require(n)).collect()
    }

    fn build(kind: OrderKind, blocks: Vec<(BlockKind, Vec<usize>)>) -> Result<Self> {
        let nvars: usize = blocks.iter().map(|(_, b)| b.len()).sum();
        let mut seen = vec![false; nvars];
        for (_, b) in &blocks {
            for &v in b {
                if v >= nvars || seen[v] {
                    return Err(Error::mismatch(
                        "monomial order ranking is not a permutation",
                    ));
                }
                seen[v] = true;
            }
        }
        let blocks = blocks.into_iter().filter(|(_, b)| !b.is_empty()).collect();
        Ok(MonomialOrder {
            kind,
            blocks,
            nvars,
        })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn blocks(&self) -> &[(BlockKind, Vec<usize>)] {
        &self.blocks
    }

    /// All variables, highest-ranked first.
    pub fn ranking(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .flat_map(|(_, b)| b.iter().copied())
            .collect()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        for (kind, block) in &self.blocks {
            let ord = match kind {
                BlockKind::Lex => block
                    .iter()
                    .map(|&v| ea[v].cmp(&eb[v]))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal),
                BlockKind::DegRevLex => {
                    let da: u32 = block.iter().map(|&v| ea[v]).sum();
                    let db: u32 = block.iter().map(|&v| eb[v]).sum();
                    if da != db {
                        da.cmp(&db)
                    } else {
                        block
                            .iter()
                            .rev()
                            .map(|&v| eb[v].cmp(&ea[v]))
                            .find(|o| o.is_ne())
                            .unwrap_or(Ordering::Equal)
                    }
                }
            };
            if ord.is_ne() {
                return ord;
            }
        }
        Ordering::Equal
    }

    /// Descriptor text such as `lex(b>a>y>x>Y>X)` or `block([a,b],[x,y])`.
    pub fn describe(&self, table: &VarTable) -> String {
        let names = |b: &[usize], sep: &str| {
            b.iter()
                .map(|&v| table.name(v).to_string())
                .collect::<Vec<_>>()
                .join(sep)
        };
        match self.kind {
            OrderKind::Lex => format!("lex({})", names(&self.blocks[0].1, ">")),
            OrderKind::DegRevLex => format!("degrevlex({})", names(&self.blocks[0].1, ">")),
            OrderKind::Block => {
                if self.blocks.iter().all(|(k, _)| *k == BlockKind::DegRevLex) {
                    let parts: Vec<String> = self
                        .blocks
                        .iter()
                        .map(|(_, b)| format!("[{}]", names(b, ",")))
                        .collect();
                    format!("block({})", parts.join(","))
                } else {
                    let parts: Vec<String> = self
                        .blocks
                        .iter()
                        .map(|(k, b)| match k {
                            BlockKind::Lex => format!("lex({})", names(b, ">")),
                            BlockKind::DegRevLex => format!("degrevlex({})", names(b, ">")),
                        })
                        .collect();
                    format!("block({})", parts.join(","))
                }
            }
        }
    }
}
