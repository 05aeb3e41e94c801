use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Sequence of generator indices. Ordered degree-lexicographically, with
/// generator precedence given by index.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub SmallVec<[u8; 8]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn letter(g: u8) -> Self {
        Word(SmallVec::from_slice(&[g]))
    }

    pub fn from_slice(s: &[u8]) -> Self {
        Word(SmallVec::from_slice(s))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Word(v)
    }

    /// `self[..at] ++ mid ++ self[at+len..]`.
    pub fn splice(&self, at: usize, len: usize, mid: &Word) -> Word {
        let mut v: SmallVec<[u8; 8]> = SmallVec::with_capacity(self.len() - len + mid.len());
        v.extend_from_slice(&self.0[..at]);
        v.extend_from_slice(&mid.0);
        v.extend_from_slice(&self.0[at + len..]);
        Word(v)
    }

    /// All words of exactly `len` letters over `n` generators, in order.
    pub fn all_of_len(n: u8, len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| (0..n).map(move |g| w.concat(&Word::letter(g))))
                .collect();
        }
        out
    }

    /// All words with at most `maxlen` letters, shortest first.
    pub fn all_up_to(n: u8, maxlen: usize) -> Vec<Word> {
        (0..=maxlen).flat_map(|l| Word::all_of_len(n, l)).collect()
    }
}

impl Ord for Word {
    fn cmp(&self, o: &Self) -> Ordering {
        self.len().cmp(&o.len()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Generator names, listed in increasing precedence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    /// Panics on duplicate names or more than 255 symbols.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        assert!(names.len() < 256, "alphabet too large");
        for (k, n) in names.iter().enumerate() {
            assert!(!names[..k].contains(n), "duplicate generator {n}");
        }
        Alphabet { names }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<u8> {
        self.names.iter().position(|n| n == name).map(|k| k as u8)
    }

    pub fn name(&self, g: u8) -> &str {
        &self.names[g as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Parse a word written as space- or `·`-separated generator names.
    pub fn parse_word(&self, s: &str) -> Option<Word> {
        let mut v = SmallVec::new();
        for tok in s.split(|c: char| c.is_whitespace() || c == '·').filter(|t| !t.is_empty()) {
            v.push(self.index(tok)?);
        }
        Some(Word(v))
    }

    pub fn fmt_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.0.iter().map(|&g| self.name(g)).collect::<Vec<_>>().join("·")
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names.join(" < "))
    }
}
