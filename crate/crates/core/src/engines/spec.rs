//! Engine spec strings.
//!
//! ```text
//! spec := "free:" INT | "cyclic:" INT | "heis:" INT
//!       | "fp(" spec "," spec ")" | "dp(" spec "," spec ")"
//!       | "table:" PATH
//! ```
//!
//! `PATH` runs up to the next `,` or `)` or the end of input.

use std::fmt;
use std::path::Path;

use super::{
    engine_cyclic, engine_direct_product, engine_free, engine_free_product, engine_heisenberg_p,
    FiniteTable, GroupEngine,
};
use crate::error::{Error, Result};

pub fn parse_engine_spec(text: &str) -> Result<GroupEngine> {
    let mut p = Parser { src: text, pos: 0 };
    let engine = p.spec()?;
    if p.pos != text.len() {
        return Err(p.syntax("trailing input"));
    }
    Ok(engine)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn syntax(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.syntax(format!("expected `{token}`")))
        }
    }

    fn int(&mut self) -> Result<u64> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.syntax("expected integer"));
        }
        let v = self.rest()[..digits]
            .parse()
            .map_err(|_| self.syntax("integer out of range"))?;
        self.pos += digits;
        Ok(v)
    }

    fn spec(&mut self) -> Result<GroupEngine> {
        let start = self.pos;
        if self.eat("free:") {
            let rank = self.int()?;
            engine_free(rank as usize)
        } else if self.eat("cyclic:") {
            Ok(engine_cyclic(self.int()?))
        } else if self.eat("heis:") {
            let p = self.int()?;
            let p = u32::try_from(p)
                .map_err(|_| Error::InvalidEngine("p must be an odd prime".into()))?;
            engine_heisenberg_p(p)
        } else if self.eat("fp(") {
            let (l, r) = self.pair()?;
            Ok(engine_free_product(l, r))
        } else if self.eat("dp(") {
            let (l, r) = self.pair()?;
            Ok(engine_direct_product(l, r))
        } else if self.eat("table:") {
            let len = self.rest().find([',', ')']).unwrap_or(self.rest().len());
            if len == 0 {
                return Err(self.syntax("expected table path"));
            }
            let path = &self.rest()[..len];
            self.pos += len;
            let table = FiniteTable::load(Path::new(path))?;
            Ok(GroupEngine::Table(table.into()))
        } else {
            self.pos = start;
            Err(self.syntax("expected one of free:, cyclic:, heis:, fp(, dp(, table:"))
        }
    }

    fn pair(&mut self) -> Result<(GroupEngine, GroupEngine)> {
        let l = self.spec()?;
        self.expect(",")?;
        let r = self.spec()?;
        self.expect(")")?;
        Ok((l, r))
    }
}

/// Canonical spec rendering; `parse_engine_spec` inverts it.
impl fmt::Display for GroupEngine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupEngine::Free { rank } => write!(f, "free:{rank}"),
            GroupEngine::Cyclic { modulus } => write!(f, "cyclic:{modulus}"),
            GroupEngine::Heisenberg { p } => write!(f, "heis:{p}"),
            GroupEngine::Table(t) => write!(f, "table:{}", t.label()),
            GroupEngine::FreeProduct(a, b) => write!(f, "fp({a},{b})"),
            GroupEngine::DirectProduct(a, b) => write!(f, "dp({a},{b})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engines::EngineKind;

    #[test]
    fn parses_examples() {
        let z2 = parse_engine_spec("dp(cyclic:0,cyclic:0)").unwrap();
        assert_eq!(z2.kind(), EngineKind::DirectProduct);
        assert_eq!(z2.order(), None);
        let fp = parse_engine_spec("fp(cyclic:3,cyclic:3)").unwrap();
        assert_eq!(fp.kind(), EngineKind::FreeProduct);
        assert_eq!(fp.rank(), 2);
    }

    #[test]
    fn semantic_error() {
        let err = parse_engine_spec("heis:4").unwrap_err();
        assert!(err.to_string().contains("p must be an odd prime"), "{err}");
        assert!(parse_engine_spec("free:0").is_err());
    }

    #[test]
    fn syntax_offsets() {
        match parse_engine_spec("fp(cyclic:3;cyclic:3)") {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 11),
            other => panic!("unexpected {other:?}"),
        }
        match parse_engine_spec("cyclic:") {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 7),
            other => panic!("unexpected {other:?}"),
        }
        match parse_engine_spec("free:2x") {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_engine_spec("torus:3"),
            Err(Error::Syntax { offset: 0, .. })
        ));
    }

    #[test]
    fn table_spec_loads_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("klein.tbl");
        std::fs::write(&path, crate::engines::table::klein_four().render()).unwrap();
        let spec = format!("dp(table:{},cyclic:2)", path.display());
        let e = parse_engine_spec(&spec).unwrap();
        assert_eq!(e.order(), Some(8));
        assert_eq!(e.to_string(), spec);
    }
}
