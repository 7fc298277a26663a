//! Text form of forests.
//!
//! ```text
//! forest := "1" | tree (WS tree)*
//! tree   := IDENT | IDENT "[" forest "]"
//! ```
//!
//! Leaves are rendered bare; `a[1]` parses as the leaf `a`.

use super::{Alphabet, Forest, Tree};
use crate::error::ForestError;

pub fn render_forest(f: &Forest) -> String {
    if f.is_empty() {
        return "1".to_string();
    }
    let mut out = String::new();
    write_trees(f.trees(), &mut out);
    out
}

fn write_trees(trees: &[Tree], out: &mut String) {
    for (i, t) in trees.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(t.root().symbol());
        if !t.children().is_empty() {
            out.push('[');
            write_trees(t.children(), out);
            out.push(']');
        }
    }
}

pub fn parse_forest(text: &str, alphabet: &Alphabet) -> Result<Forest, ForestError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        alphabet,
    };
    p.skip_ws();
    let trees = p.forest()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(Forest::from_trees(trees))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> ForestError {
        ForestError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) -> bool {
        let start = self.pos;
        while self.peek() == Some(b' ') {
            self.pos += 1;
        }
        self.pos > start
    }

    fn forest(&mut self) -> Result<Vec<Tree>, ForestError> {
        if self.peek() == Some(b'1') {
            self.pos += 1;
            return Ok(Vec::new());
        }
        let mut trees = vec![self.tree()?];
        loop {
            let save = self.pos;
            if !self.skip_ws() {
                break;
            }
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => trees.push(self.tree()?),
                _ => {
                    self.pos = save;
                    break;
                }
            }
        }
        Ok(trees)
    }

    fn ident(&mut self) -> Result<&str, ForestError> {
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.pos += 1,
            Some(_) => return Err(self.error("expected a symbol")),
            None => return Err(self.error("unexpected end of input, expected a symbol")),
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        // ASCII only, so the slice is valid UTF-8.
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn tree(&mut self) -> Result<Tree, ForestError> {
        let start = self.pos;
        let sym = self.ident()?.to_string();
        let root = self
            .alphabet
            .lookup(&sym)
            .cloned()
            .ok_or(ForestError::UnknownSymbol { symbol: sym, pos: start })?;
        if self.peek() != Some(b'[') {
            return Ok(Tree::leaf(root));
        }
        if !root.is_omega() {
            return Err(ForestError::InternalX(root.symbol().to_string()));
        }
        self.pos += 1;
        self.skip_ws();
        let children = self.forest()?;
        self.skip_ws();
        if self.peek() != Some(b']') {
            return Err(self.error("expected `]`"));
        }
        self.pos += 1;
        Tree::new(root, children)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::Decoration;

    fn alpha() -> Alphabet {
        Alphabet::new(&["a", "b"], &["x", "y"]).unwrap()
    }

    #[test]
    fn parses_empty_forest() {
        assert_eq!(parse_forest("1", &alpha()).unwrap(), Forest::empty());
    }

    #[test]
    fn parses_tree_with_x_leaf() {
        let f = parse_forest("a[x]", &alpha()).unwrap();
        let expected = Forest::single(
            Tree::new(Decoration::omega("a"), vec![Tree::leaf(Decoration::x("x"))]).unwrap(),
        );
        assert_eq!(f, expected);
    }

    #[test]
    fn rejects_internal_x() {
        assert!(matches!(
            parse_forest("x[a]", &alpha()),
            Err(ForestError::InternalX(_))
        ));
    }

    #[test]
    fn rejects_unknown_symbol_with_position() {
        assert_eq!(
            parse_forest("a[x] q", &alpha()),
            Err(ForestError::UnknownSymbol {
                symbol: "q".into(),
                pos: 5
            })
        );
    }

    #[test]
    fn rejects_malformed_brackets() {
        for bad in ["a[x", "a[x]]", "a[]", "[x]", "a x]", "1 a", "a,b", ""] {
            assert!(parse_forest(bad, &alpha()).is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn explicit_empty_child_list_is_a_leaf() {
        assert_eq!(
            parse_forest("a[1]", &alpha()).unwrap(),
            parse_forest("a", &alpha()).unwrap()
        );
    }

    #[test]
    fn renders_canonically() {
        assert_eq!(render_forest(&Forest::empty()), "1");
        let f = parse_forest("a[ x  b ]", &alpha()).unwrap();
        assert_eq!(render_forest(&f), "a[x b]");
        let g = parse_forest("y a[x]", &alpha()).unwrap();
        assert_eq!(render_forest(&g), "y a[x]");
    }
}
