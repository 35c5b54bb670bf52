//! Byte-level BPE over code tokens, model-ready sequences and MLM masking.
//!
//! Merges never cross source-token boundaries, so every source token maps to
//! one or more sub-tokens and each sub-token inherits its token's label.

use crate::labels::{CLS_LABEL_ID, SEP_LABEL_ID};
use crate::rng::rng_from_seed;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};
use std::io::{BufRead, Write};
use std::path::Path;
use thiserror::Error;

pub const PAD_ID: u32 = 0;
pub const UNK_ID: u32 = 1;
pub const CLS_ID: u32 = 2;
pub const SEP_ID: u32 = 3;
pub const MASK_ID: u32 = 4;
pub const SPECIAL_TOKENS: [&str; 5] = ["[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"];
/// Id of byte 0; byte `b` has id `BYTE_OFFSET + b`.
pub const BYTE_OFFSET: u32 = SPECIAL_TOKENS.len() as u32;
/// Specials plus the 256 byte symbols.
pub const BASE_VOCAB: usize = SPECIAL_TOKENS.len() + 256;
pub const MAX_SEQ_LEN: usize = 512;
pub const DEFAULT_MASK_RATE: f64 = 0.15;
pub const DEFAULT_VOCAB_SIZE: usize = 50_000;

const FORMAT_HEADER: &str = "#cloneaware-bpe 1";

#[derive(Debug, Error)]
pub enum TokenizerError {
    #[error("training corpus is empty")]
    EmptyCorpus,
    #[error("target vocabulary {target} must exceed the {BASE_VOCAB} base symbols")]
    TargetTooSmall { target: usize },
    #[error("corpus supports only {learned} merges, {requested} requested")]
    CorpusTooSmall { learned: usize, requested: usize },
    #[error("model file line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("model I/O: {0}")]
    Io(#[from] std::io::Error),
    #[error("sequence is already masked")]
    AlreadyMasked,
    #[error("maximum sequence length {0} leaves no room for content")]
    MaxLenTooSmall(usize),
    #[error("{tokens} tokens but {labels} labels")]
    LabelMismatch { tokens: usize, labels: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubwordModel {
    /// Merge rules in learning order; rule `r` creates id `BASE_VOCAB + r`.
    merges: Vec<(u32, u32)>,
    /// Byte content of every non-special id.
    pieces: Vec<Vec<u8>>,
    ranks: HashMap<(u32, u32), u32>,
    target: usize,
    corpus_sha256: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrainOptions {
    pub target_vocab: usize,
    /// Return a smaller vocabulary instead of failing when merges run out.
    pub allow_exhaustion: bool,
}

impl Default for TrainOptions {
    fn default() -> Self {
        Self {
            target_vocab: DEFAULT_VOCAB_SIZE,
            allow_exhaustion: false,
        }
    }
}

/// Hash of a token corpus, in the exact order given.
pub fn corpus_digest<S: AsRef<str>>(corpus: &[Vec<S>]) -> String {
    let mut h = Sha256::new();
    for seq in corpus {
        for t in seq {
            h.update((t.as_ref().len() as u64).to_le_bytes());
            h.update(t.as_ref().as_bytes());
        }
        h.update(u64::MAX.to_le_bytes());
    }
    hex::encode(h.finalize())
}

struct Word {
    symbols: Vec<u32>,
    count: u64,
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct Candidate {
    count: u64,
    // Reverse order so that, among equal counts, the lexicographically
    // smallest (left, right) byte content pops first.
    key: Reverse<(Vec<u8>, Vec<u8>)>,
    pair: (u32, u32),
}

fn pairs_of(symbols: &[u32]) -> impl Iterator<Item = (u32, u32)> + '_ {
    symbols.windows(2).map(|w| (w[0], w[1]))
}

/// Learns merges until the vocabulary (specials, bytes and merges) reaches
/// `target_vocab`. The most frequent adjacent pair is merged first; ties go
/// to the pair whose byte content sorts first.
pub fn train_subword<S: AsRef<str>>(corpus: &[Vec<S>], opts: TrainOptions) -> Result<SubwordModel, TokenizerError> {
    if corpus.iter().all(|s| s.is_empty()) {
        return Err(TokenizerError::EmptyCorpus);
    }
    if opts.target_vocab <= BASE_VOCAB {
        return Err(TokenizerError::TargetTooSmall { target: opts.target_vocab });
    }
    let requested = opts.target_vocab - BASE_VOCAB;
    let mut freq: HashMap<&str, u64> = HashMap::new();
    for seq in corpus {
        for t in seq {
            *freq.entry(t.as_ref()).or_default() += 1;
        }
    }
    let mut keys: Vec<&str> = freq.keys().copied().collect();
    keys.sort_unstable();
    let mut words: Vec<Word> = keys
        .iter()
        .map(|k| Word {
            symbols: k.bytes().map(|b| BYTE_OFFSET + b as u32).collect(),
            count: freq[k],
        })
        .collect();
    let mut pieces: Vec<Vec<u8>> = (0..=255u8).map(|b| vec![b]).collect();
    let piece = |pieces: &Vec<Vec<u8>>, id: u32| pieces[(id - BYTE_OFFSET) as usize].clone();

    let mut counts: HashMap<(u32, u32), u64> = HashMap::new();
    let mut where_: HashMap<(u32, u32), HashSet<usize>> = HashMap::new();
    for (i, w) in words.iter().enumerate() {
        for p in pairs_of(&w.symbols) {
            *counts.entry(p).or_default() += w.count;
            where_.entry(p).or_default().insert(i);
        }
    }
    let mut heap: BinaryHeap<Candidate> = counts
        .iter()
        .map(|(&pair, &count)| Candidate {
            count,
            key: Reverse((piece(&pieces, pair.0), piece(&pieces, pair.1))),
            pair,
        })
        .collect();

    let mut merges = Vec::new();
    while merges.len() < requested {
        let Some(top) = heap.pop() else { break };
        let current = counts.get(&top.pair).copied().unwrap_or(0);
        if current == 0 {
            continue;
        }
        if current != top.count {
            heap.push(Candidate { count: current, ..top });
            continue;
        }
        let (a, b) = top.pair;
        let new_id = BYTE_OFFSET + pieces.len() as u32;
        let mut content = piece(&pieces, a);
        content.extend(piece(&pieces, b));
        pieces.push(content);
        merges.push((a, b));

        let mut affected: Vec<usize> = where_.remove(&top.pair).unwrap_or_default().into_iter().collect();
        affected.sort_unstable();
        let mut touched: HashSet<(u32, u32)> = HashSet::new();
        for wi in affected {
            let w = &mut words[wi];
            for p in pairs_of(&w.symbols) {
                if let Some(c) = counts.get_mut(&p) {
                    *c -= w.count;
                }
                touched.insert(p);
            }
            let mut merged = Vec::with_capacity(w.symbols.len());
            let mut i = 0;
            while i < w.symbols.len() {
                if i + 1 < w.symbols.len() && w.symbols[i] == a && w.symbols[i + 1] == b {
                    merged.push(new_id);
                    i += 2;
                } else {
                    merged.push(w.symbols[i]);
                    i += 1;
                }
            }
            w.symbols = merged;
            for p in pairs_of(&w.symbols) {
                *counts.entry(p).or_default() += w.count;
                where_.entry(p).or_default().insert(wi);
                touched.insert(p);
            }
        }
        counts.remove(&top.pair);
        let mut touched: Vec<(u32, u32)> = touched.into_iter().collect();
        touched.sort_unstable();
        for p in touched {
            match counts.get(&p).copied() {
                Some(0) => {
                    counts.remove(&p);
                    where_.remove(&p);
                }
                Some(count) => heap.push(Candidate {
                    count,
                    key: Reverse((piece(&pieces, p.0), piece(&pieces, p.1))),
                    pair: p,
                }),
                None => {}
            }
        }
    }
    if merges.len() < requested && !opts.allow_exhaustion {
        return Err(TokenizerError::CorpusTooSmall {
            learned: merges.len(),
            requested,
        });
    }
    Ok(SubwordModel::from_parts(merges, opts.target_vocab, corpus_digest(corpus)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TokenizedSequence {
    pub ids: Vec<u32>,
    pub label_ids: Vec<u32>,
    pub mask_positions: Vec<usize>,
    pub originals_at_mask: Vec<u32>,
    pub truncated: bool,
}

impl TokenizedSequence {
    /// Number of non-special positions.
    pub fn content_len(&self) -> usize {
        self.ids.len().saturating_sub(2)
    }
}

impl SubwordModel {
    fn from_parts(merges: Vec<(u32, u32)>, target: usize, corpus_sha256: String) -> Self {
        let mut pieces: Vec<Vec<u8>> = (0..=255u8).map(|b| vec![b]).collect();
        let mut ranks = HashMap::new();
        for (r, &(a, b)) in merges.iter().enumerate() {
            let mut p = pieces[(a - BYTE_OFFSET) as usize].clone();
            p.extend_from_slice(&pieces[(b - BYTE_OFFSET) as usize]);
            pieces.push(p);
            ranks.insert((a, b), r as u32);
        }
        Self {
            merges,
            pieces,
            ranks,
            target,
            corpus_sha256,
        }
    }

    pub fn vocab_size(&self) -> usize {
        SPECIAL_TOKENS.len() + self.pieces.len()
    }

    pub fn merges(&self) -> &[(u32, u32)] {
        &self.merges
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn corpus_sha256(&self) -> &str {
        &self.corpus_sha256
    }

    /// Byte content of an id, or the special token's name.
    pub fn piece(&self, id: u32) -> Option<std::borrow::Cow<'_, [u8]>> {
        if id < BYTE_OFFSET {
            return SPECIAL_TOKENS.get(id as usize).map(|s| s.as_bytes().into());
        }
        self.pieces.get((id - BYTE_OFFSET) as usize).map(|p| p.as_slice().into())
    }

    /// Sub-token ids of one source token.
    pub fn encode_token(&self, token: &str) -> Vec<u32> {
        let mut syms: Vec<u32> = token.bytes().map(|b| BYTE_OFFSET + b as u32).collect();
        loop {
            let best = pairs_of(&syms)
                .enumerate()
                .filter_map(|(i, p)| self.ranks.get(&p).map(|&r| (r, i)))
                .min();
            let Some((rank, _)) = best else { break };
            let (a, b) = self.merges[rank as usize];
            let new_id = BASE_VOCAB as u32 + rank;
            let mut out = Vec::with_capacity(syms.len());
            let mut i = 0;
            while i < syms.len() {
                if i + 1 < syms.len() && syms[i] == a && syms[i + 1] == b {
                    out.push(new_id);
                    i += 2;
                } else {
                    out.push(syms[i]);
                    i += 1;
                }
            }
            syms = out;
        }
        syms
    }

    /// `[CLS] sub-tokens [SEP]`, with each token's label copied to all of
    /// its sub-tokens. Sequences over [`MAX_SEQ_LEN`] keep their head.
    pub fn encode<S: AsRef<str>>(&self, tokens: &[S], labels: &[u32]) -> Result<TokenizedSequence, TokenizerError> {
        self.encode_with_max_len(tokens, labels, MAX_SEQ_LEN)
    }

    pub fn encode_with_max_len<S: AsRef<str>>(
        &self,
        tokens: &[S],
        labels: &[u32],
        max_len: usize,
    ) -> Result<TokenizedSequence, TokenizerError> {
        if max_len < 3 {
            return Err(TokenizerError::MaxLenTooSmall(max_len));
        }
        if tokens.len() != labels.len() {
            return Err(TokenizerError::LabelMismatch {
                tokens: tokens.len(),
                labels: labels.len(),
            });
        }
        let mut ids = vec![CLS_ID];
        let mut label_ids = vec![CLS_LABEL_ID];
        let mut truncated = false;
        'outer: for (t, &l) in tokens.iter().zip(labels) {
            for id in self.encode_token(t.as_ref()) {
                if ids.len() == max_len - 1 {
                    truncated = true;
                    break 'outer;
                }
                ids.push(id);
                label_ids.push(l);
            }
        }
        ids.push(SEP_ID);
        label_ids.push(SEP_LABEL_ID);
        Ok(TokenizedSequence {
            ids,
            label_ids,
            mask_positions: Vec::new(),
            originals_at_mask: Vec::new(),
            truncated,
        })
    }

    /// Concatenated bytes of all non-special ids.
    pub fn decode(&self, ids: &[u32]) -> String {
        let mut bytes = Vec::new();
        for &id in ids {
            if id >= BYTE_OFFSET {
                if let Some(p) = self.pieces.get((id - BYTE_OFFSET) as usize) {
                    bytes.extend_from_slice(p);
                }
            }
        }
        String::from_utf8_lossy(&bytes).into_owned()
    }

    pub fn write_to<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "{FORMAT_HEADER}")?;
        writeln!(w, "#corpus-sha256 {}", self.corpus_sha256)?;
        writeln!(w, "#target {}", self.target)?;
        writeln!(w, "#vocab {}", self.vocab_size())?;
        for (i, s) in SPECIAL_TOKENS.iter().enumerate() {
            writeln!(w, "special {i} {s}")?;
        }
        for (i, p) in self.pieces.iter().enumerate() {
            writeln!(w, "piece {} {}", i as u32 + BYTE_OFFSET, hex::encode(p))?;
        }
        for (a, b) in &self.merges {
            writeln!(w, "merge {a} {b}")?;
        }
        Ok(())
    }

    pub fn read_from<R: BufRead>(r: R) -> Result<Self, TokenizerError> {
        let bad = |line: usize, message: &str| TokenizerError::Format {
            line,
            message: message.to_string(),
        };
        let mut digest = None;
        let mut target = None;
        let mut vocab = None;
        let mut pieces: Vec<(u32, Vec<u8>)> = Vec::new();
        let mut merges = Vec::new();
        for (i, line) in r.lines().enumerate() {
            let line = line?;
            let n = i + 1;
            if i == 0 {
                if line != FORMAT_HEADER {
                    return Err(bad(n, "missing format header"));
                }
                continue;
            }
            let mut parts = line.split(' ');
            match (parts.next(), parts.next(), parts.next()) {
                (Some("#corpus-sha256"), Some(h), None) => digest = Some(h.to_string()),
                (Some("#target"), Some(t), None) => target = Some(t.parse().map_err(|_| bad(n, "bad target"))?),
                (Some("#vocab"), Some(v), None) => vocab = Some(v.parse::<usize>().map_err(|_| bad(n, "bad vocab size"))?),
                (Some("special"), Some(id), Some(name)) => {
                    let id: usize = id.parse().map_err(|_| bad(n, "bad special id"))?;
                    if SPECIAL_TOKENS.get(id) != Some(&name) {
                        return Err(bad(n, "unexpected special token"));
                    }
                }
                (Some("piece"), Some(id), Some(h)) => {
                    let id = id.parse().map_err(|_| bad(n, "bad piece id"))?;
                    pieces.push((id, hex::decode(h).map_err(|_| bad(n, "bad piece bytes"))?));
                }
                (Some("merge"), Some(a), Some(b)) => {
                    let a = a.parse().map_err(|_| bad(n, "bad merge id"))?;
                    let b = b.parse().map_err(|_| bad(n, "bad merge id"))?;
                    merges.push((a, b));
                }
                _ => return Err(bad(n, "unrecognized line")),
            }
        }
        let (Some(digest), Some(target), Some(vocab)) = (digest, target, vocab) else {
            return Err(bad(0, "missing header fields"));
        };
        for &(a, b) in &merges {
            let limit = BYTE_OFFSET + 256 + merges.len() as u32;
            if a < BYTE_OFFSET || b < BYTE_OFFSET || a >= limit || b >= limit {
                return Err(bad(0, "merge refers to an unknown id"));
            }
        }
        let model = Self::from_parts(merges, target, digest);
        let expected: Vec<(u32, Vec<u8>)> = model
            .pieces
            .iter()
            .enumerate()
            .map(|(i, p)| (i as u32 + BYTE_OFFSET, p.clone()))
            .collect();
        if pieces != expected || vocab != model.vocab_size() {
            return Err(bad(0, "pieces do not match the merge list"));
        }
        Ok(model)
    }

    pub fn save(&self, path: &Path) -> Result<(), TokenizerError> {
        let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
        self.write_to(&mut f)?;
        f.flush()?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self, TokenizerError> {
        Self::read_from(std::io::BufReader::new(std::fs::File::open(path)?))
    }
}

/// Number of positions masked among `k` content positions.
pub fn mask_count(k: usize, rate: f64) -> usize {
    if k == 0 || rate <= 0.0 {
        return 0;
    }
    ((rate * k as f64).round() as usize).clamp(1, k)
}

/// Replaces [`mask_count`] randomly chosen content positions with `[MASK]`.
pub fn mask_for_mlm(seq: &TokenizedSequence, rate: f64, rng_seed: u64) -> Result<TokenizedSequence, TokenizerError> {
    if !seq.mask_positions.is_empty() || seq.ids.contains(&MASK_ID) {
        return Err(TokenizerError::AlreadyMasked);
    }
    let k = seq.content_len();
    let n = mask_count(k, rate);
    let mut rng = rng_from_seed(rng_seed);
    let mut positions: Vec<usize> = rand::seq::index::sample(&mut rng, k, n).into_iter().map(|i| i + 1).collect();
    positions.sort_unstable();
    let mut out = seq.clone();
    out.originals_at_mask = positions.iter().map(|&p| seq.ids[p]).collect();
    for &p in &positions {
        out.ids[p] = MASK_ID;
    }
    out.mask_positions = positions;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn corpus(words: &[&str]) -> Vec<Vec<String>> {
        vec![words.iter().map(|s| s.to_string()).collect()]
    }

    fn exhaustive(target_vocab: usize) -> TrainOptions {
        TrainOptions {
            target_vocab,
            allow_exhaustion: true,
        }
    }

    #[test]
    fn first_merge_on_repeated_letters() {
        let m = train_subword(&corpus(&["aaaa", "aaaa"]), exhaustive(BASE_VOCAB + 4)).unwrap();
        let a = BYTE_OFFSET + b'a' as u32;
        assert_eq!(m.merges()[0], (a, a));
        assert_eq!(m.merges().len(), 2);
        assert_eq!(m.encode_token("aaaa"), vec![BASE_VOCAB as u32 + 1]);
        assert!(matches!(
            train_subword(&corpus(&["aaaa", "aaaa"]), TrainOptions { target_vocab: BASE_VOCAB + 4, allow_exhaustion: false }),
            Err(TokenizerError::CorpusTooSmall { learned: 2, requested: 4 })
        ));
    }

    #[test]
    fn single_characters_learn_nothing() {
        let m = train_subword(&corpus(&["a", "b", "c"]), exhaustive(BASE_VOCAB + 10)).unwrap();
        assert!(m.merges().is_empty());
        assert_eq!(m.vocab_size(), BASE_VOCAB);
    }

    #[test]
    fn ties_break_by_byte_content() {
        // "ab" and "cd" both occur twice; "ab" sorts first.
        let m = train_subword(&corpus(&["cd", "ab", "cd", "ab"]), exhaustive(BASE_VOCAB + 1)).unwrap();
        assert_eq!(m.merges()[0], (BYTE_OFFSET + b'a' as u32, BYTE_OFFSET + b'b' as u32));
    }

    #[test]
    fn encoding_replicates_labels() {
        let m = train_subword(&corpus(&["int", "x", ";"]), exhaustive(BASE_VOCAB + 1)).unwrap();
        let plain = SubwordModel::from_parts(Vec::new(), BASE_VOCAB + 1, String::new());
        let seq = plain.encode(&["int", "x", ";"], &[7, 8, 9]).unwrap();
        assert_eq!(seq.ids.len(), 7);
        assert_eq!(seq.label_ids, vec![CLS_LABEL_ID, 7, 7, 7, 8, 9, SEP_LABEL_ID]);
        let seq = m.encode(&["int", "x", ";"], &[7, 8, 9]).unwrap();
        assert_eq!(seq.ids.len(), 6);
        assert_eq!(seq.label_ids, vec![CLS_LABEL_ID, 7, 7, 8, 9, SEP_LABEL_ID]);
    }

    #[test]
    fn long_input_is_truncated() {
        let toks: Vec<String> = (0..1000).map(|i| format!("{}", i % 10)).collect();
        let m = SubwordModel::from_parts(Vec::new(), BASE_VOCAB + 1, String::new());
        let seq = m.encode(&toks, &vec![5; 1000]).unwrap();
        assert_eq!(seq.ids.len(), MAX_SEQ_LEN);
        assert!(seq.truncated);
        assert_eq!(*seq.ids.last().unwrap(), SEP_ID);
    }

    #[test]
    fn mask_counts() {
        assert_eq!(mask_count(20, 0.15), 3);
        assert_eq!(mask_count(1, 0.15), 1);
        assert_eq!(mask_count(0, 0.15), 0);
        assert_eq!(mask_count(10, 0.0), 0);
        let m = SubwordModel::from_parts(Vec::new(), BASE_VOCAB + 1, String::new());
        let toks: Vec<String> = (0..20).map(|i| ((b'a' + i) as char).to_string()).collect();
        let seq = m.encode(&toks, &[9; 20]).unwrap();
        let a = mask_for_mlm(&seq, DEFAULT_MASK_RATE, 3).unwrap();
        assert_eq!(a, mask_for_mlm(&seq, DEFAULT_MASK_RATE, 3).unwrap());
        assert_eq!(a.mask_positions.len(), 3);
        assert_eq!(a.label_ids, seq.label_ids);
        for (&p, &o) in a.mask_positions.iter().zip(&a.originals_at_mask) {
            assert_eq!(a.ids[p], MASK_ID);
            assert_eq!(seq.ids[p], o);
        }
        assert!(matches!(mask_for_mlm(&a, 0.15, 1), Err(TokenizerError::AlreadyMasked)));
    }

    #[test]
    fn model_file_round_trip() {
        let c = corpus(&["return", "retval", "result", "re", "int", "integer"]);
        let m = train_subword(&c, exhaustive(BASE_VOCAB + 8)).unwrap();
        let mut buf = Vec::new();
        m.write_to(&mut buf).unwrap();
        let back = SubwordModel::read_from(&buf[..]).unwrap();
        assert_eq!(m, back);
        let mut again = Vec::new();
        train_subword(&c, exhaustive(BASE_VOCAB + 8)).unwrap().write_to(&mut again).unwrap();
        assert_eq!(buf, again);
        assert!(SubwordModel::read_from(&b"junk\n"[..]).is_err());
    }
}
