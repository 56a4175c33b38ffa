use super::{BraidWord, KnotDiagram, KnotError, MAX_STRANDS};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, KnotError> {
        Err(KnotError::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), KnotError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.err(format!("expected '{c}', found '{found}'")),
                None => self.err(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn int(&mut self) -> Result<i64, KnotError> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        let mut end = start;
        if end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
            end += 1;
        }
        let digits = end;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == digits {
            return self.err("expected an integer");
        }
        match self.src[start..end].parse() {
            Ok(v) => {
                self.pos = end;
                Ok(v)
            }
            Err(_) => self.err("integer out of range"),
        }
    }
}

/// Parses `[(a,b,c,d), …]` and validates the diagram.
pub fn parse_pd(src: &str) -> Result<KnotDiagram, KnotError> {
    let mut cur = Cursor::new(src);
    cur.expect('[')?;
    let mut tuples = Vec::new();
    if !cur.eat(']') {
        loop {
            cur.expect('(')?;
            let mut t = [0u32; 4];
            for (i, slot) in t.iter_mut().enumerate() {
                if i > 0 {
                    cur.expect(',')?;
                }
                let at = cur.pos;
                let v = cur.int()?;
                *slot = u32::try_from(v)
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or(KnotError::Parse { pos: at, msg: format!("edge label {v} must be positive") })?;
            }
            cur.expect(')')?;
            tuples.push(t);
            if cur.eat(']') {
                break;
            }
            cur.expect(',')?;
        }
    }
    if !cur.at_end() {
        return cur.err("trailing input after diagram");
    }
    KnotDiagram::from_pd(tuples)
}

/// Parses a Dowker–Thistlethwaite code of signed even integers separated by
/// whitespace or commas.
pub fn parse_dt(src: &str) -> Result<Vec<i64>, KnotError> {
    let mut cur = Cursor::new(src);
    let mut codes = Vec::new();
    while !cur.at_end() {
        if !codes.is_empty() {
            cur.eat(',');
        }
        let at = cur.pos;
        let v = cur.int()?;
        if v == 0 || v % 2 != 0 {
            return Err(KnotError::Parse { pos: at, msg: format!("DT entries must be nonzero even integers, got {v}") });
        }
        codes.push(v);
    }
    Ok(codes)
}

/// Parses `strands=n l₁ l₂ …`; without the prefix the strand count is one
/// more than the largest generator.
pub fn parse_braid(src: &str) -> Result<BraidWord, KnotError> {
    let mut cur = Cursor::new(src);
    cur.skip_ws();
    let mut strands = None;
    if cur.src[cur.pos..].starts_with("strands") {
        cur.pos += "strands".len();
        cur.expect('=')?;
        let at = cur.pos;
        let n = cur.int()?;
        if !(1..=MAX_STRANDS as i64).contains(&n) {
            return Err(KnotError::Parse { pos: at, msg: format!("strand count {n} out of range") });
        }
        strands = Some(n as usize);
    }
    let mut letters = Vec::new();
    while !cur.at_end() {
        cur.eat(',');
        let at = cur.pos;
        let v = cur.int()?;
        let l = i32::try_from(v)
            .ok()
            .filter(|&l| l != 0)
            .ok_or(KnotError::Parse { pos: at, msg: format!("invalid braid generator {v}") })?;
        letters.push(l);
    }
    let strands = strands.unwrap_or_else(|| letters.iter().map(|l| l.unsigned_abs() as usize + 1).max().unwrap_or(1));
    BraidWord::new(strands, letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pd_round_trip() {
        let k = parse_pd(" [ (1,4,2,5), (3,6,4,1),(5,2,6,3) ] ").unwrap();
        assert_eq!(parse_pd(&k.to_pd_string()).unwrap(), k);
        assert_eq!(parse_pd("[]").unwrap(), KnotDiagram::unknot());
    }

    #[test]
    fn pd_errors_carry_positions() {
        match parse_pd("[(1,4,2,5) (3,6,4,1)]") {
            Err(KnotError::Parse { pos, .. }) => assert_eq!(pos, 11),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_pd("[(1,4,-2,5)]"), Err(KnotError::Parse { pos: 6, .. })));
        assert!(matches!(parse_pd("[(1,4,2,5)] x"), Err(KnotError::Parse { .. })));
    }

    #[test]
    fn dt_and_braid() {
        assert_eq!(parse_dt("4 6 2").unwrap(), vec![4, 6, 2]);
        assert_eq!(parse_dt("4, -6, 2").unwrap(), vec![4, -6, 2]);
        assert!(parse_dt("4 5 2").is_err());
        let b = parse_braid("strands=3 1 -2 1").unwrap();
        assert_eq!((b.strands(), b.letters()), (3, &[1, -2, 1][..]));
        assert_eq!(parse_braid("1 1 1").unwrap().strands(), 2);
        assert!(parse_braid("strands=2 3").is_err());
        assert!(parse_braid("strands=2 x").is_err());
        assert!(parse_braid("222222222").is_err());
    }
}
