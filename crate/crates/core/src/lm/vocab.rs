use std::collections::HashMap;

use crate::corpus::Lexicon;

pub type WordId = u32;

pub const BOS: &str = "<s>";
pub const EOS: &str = "</s>";
pub const UNK: &str = "<unk>";

/// Word <-> id mapping. Ids 0, 1 and 2 are always `<s>`, `</s>` and `<unk>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocab {
    words: Vec<String>,
    index: HashMap<String, WordId>,
}

impl Default for Vocab {
    fn default() -> Self {
        Self::new()
    }
}

impl Vocab {
    pub const BOS_ID: WordId = 0;
    pub const EOS_ID: WordId = 1;
    pub const UNK_ID: WordId = 2;

    pub fn new() -> Self {
        let mut v = Self {
            words: Vec::new(),
            index: HashMap::new(),
        };
        for w in [BOS, EOS, UNK] {
            v.insert(w);
        }
        v
    }

    pub fn from_lexicon(lexicon: &Lexicon) -> Self {
        let mut v = Self::new();
        for w in lexicon.words() {
            v.insert(w);
        }
        v
    }

    pub fn insert(&mut self, word: &str) -> WordId {
        if let Some(&id) = self.index.get(word) {
            return id;
        }
        let id = self.words.len() as WordId;
        self.words.push(word.to_string());
        self.index.insert(word.to_string(), id);
        id
    }

    pub fn id(&self, word: &str) -> Option<WordId> {
        self.index.get(word).copied()
    }

    pub fn id_or_unk(&self, word: &str) -> WordId {
        self.id(word).unwrap_or(Self::UNK_ID)
    }

    pub fn word(&self, id: WordId) -> &str {
        &self.words[id as usize]
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    /// Ids that can be predicted, i.e. every id except `<s>`.
    pub fn predicted(&self) -> impl Iterator<Item = WordId> {
        1..self.words.len() as WordId
    }

    /// This vocabulary followed by the words of `other` that it lacks.
    pub fn union(&self, other: &Vocab) -> Vocab {
        let mut v = self.clone();
        for w in &other.words {
            v.insert(w);
        }
        v
    }

    pub fn contains_all(&self, other: &Vocab) -> bool {
        other.words.iter().all(|w| self.index.contains_key(w))
    }
}
