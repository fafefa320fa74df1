//! Text with an appended sentinel, addressed 1-based.

use crate::error::{Error, Result};

/// Terminator appended to every text. Must not occur in user input.
pub const SENTINEL: u8 = 0;

/// A byte text of length `n` whose last symbol is the sentinel.
/// Positions are 1-based throughout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Text {
    bytes: Vec<u8>,
}

impl Text {
    /// Wraps `content` (which may not contain the sentinel byte) and appends
    /// the sentinel.
    pub fn from_content(content: &[u8]) -> Result<Self> {
        if let Some(pos) = content.iter().position(|&b| b == SENTINEL) {
            return Err(Error::SentinelInText(pos));
        }
        let mut bytes = content.to_vec();
        bytes.push(SENTINEL);
        Ok(Text { bytes })
    }

    /// Total length `n`, sentinel included. Always ≥ 1.
    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Symbol at 1-based position `i`, `1 ≤ i ≤ n`.
    #[inline]
    pub fn at(&self, i: usize) -> u8 {
        self.bytes[i - 1]
    }

    /// All `n` symbols, sentinel last.
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// The `n − 1` content symbols.
    pub fn content(&self) -> &[u8] {
        &self.bytes[..self.bytes.len() - 1]
    }

    /// Reverses the content symbols, keeping the sentinel last.
    pub fn reversed(&self) -> Text {
        let mut bytes: Vec<u8> = self.content().iter().rev().copied().collect();
        bytes.push(SENTINEL);
        Text { bytes }
    }

    /// Number of distinct symbols present, sentinel included.
    pub fn alphabet_size(&self) -> usize {
        let mut seen = [false; 256];
        for &b in &self.bytes {
            seen[b as usize] = true;
        }
        seen.iter().filter(|&&s| s).count()
    }
}

/// A sentinel-free, non-empty query pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    bytes: Vec<u8>,
}

impl Pattern {
    pub fn new(bytes: &[u8]) -> Result<Self> {
        if bytes.is_empty() {
            return Err(Error::EmptyPattern);
        }
        if let Some(pos) = bytes.iter().position(|&b| b == SENTINEL) {
            return Err(Error::SentinelInPattern(pos));
        }
        Ok(Pattern {
            bytes: bytes.to_vec(),
        })
    }

    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn reversed(&self) -> Pattern {
        Pattern {
            bytes: self.bytes.iter().rev().copied().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sentinel_appended() {
        let t = Text::from_content(b"abc").unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(t.at(4), SENTINEL);
        assert_eq!(t.content(), b"abc");
    }

    #[test]
    fn sentinel_in_content_rejected() {
        assert!(matches!(
            Text::from_content(b"a\0b"),
            Err(Error::SentinelInText(1))
        ));
    }

    #[test]
    fn empty_content_is_just_sentinel() {
        let t = Text::from_content(b"").unwrap();
        assert_eq!(t.bytes(), &[SENTINEL]);
    }

    #[test]
    fn reverse_keeps_sentinel_last() {
        let t = Text::from_content(b"abracadabra").unwrap();
        assert_eq!(t.reversed().bytes(), b"arbadacarba\0");
        assert_eq!(t.reversed().reversed(), t);
    }

    #[test]
    fn pattern_validation() {
        assert!(matches!(Pattern::new(b""), Err(Error::EmptyPattern)));
        assert!(matches!(
            Pattern::new(b"a\0"),
            Err(Error::SentinelInPattern(1))
        ));
        assert_eq!(Pattern::new(b"abra").unwrap().len(), 4);
    }
}
