mod common;

use cloneaware::tokenizer::{mask_count, mask_for_mlm, train_subword, TrainOptions, BASE_VOCAB, CLS_ID, MASK_ID, SEP_ID};
use common::{bpe_encode_naive, bpe_train_naive};
use proptest::prelude::*;

fn words() -> impl Strategy<Value = Vec<String>> {
    prop::collection::vec("[abc_]{1,7}", 1..40)
}

fn opts(merges: usize) -> TrainOptions {
    TrainOptions { target_vocab: BASE_VOCAB + merges, allow_exhaustion: true }
}

proptest! {
    #[test]
    fn training_matches_naive_recount(ws in words(), merges in 1usize..30) {
        let model = train_subword(&[ws.clone()], opts(merges)).unwrap();
        let got: Vec<(Vec<u8>, Vec<u8>)> = model
            .merges()
            .iter()
            .map(|&(a, b)| (model.piece(a).unwrap().into_owned(), model.piece(b).unwrap().into_owned()))
            .collect();
        prop_assert_eq!(got, bpe_train_naive(&ws, merges));
    }

    #[test]
    fn encoding_matches_naive_merges(ws in words(), probe in "[abcd_]{1,12}", merges in 1usize..30) {
        let model = train_subword(&[ws.clone()], opts(merges)).unwrap();
        let naive = bpe_encode_naive(&probe, &bpe_train_naive(&ws, merges));
        let got: Vec<Vec<u8>> = model.encode_token(&probe).iter().map(|&id| model.piece(id).unwrap().into_owned()).collect();
        prop_assert_eq!(got.concat(), probe.as_bytes().to_vec());
        prop_assert_eq!(got, naive);
    }

    #[test]
    fn labels_follow_subtokens(ws in words(), merges in 1usize..20, max_len in 3usize..64) {
        let model = train_subword(&[ws.clone()], opts(merges)).unwrap();
        let labels: Vec<u32> = (0..ws.len() as u32).map(|i| 10 + i).collect();
        let seq = model.encode_with_max_len(&ws, &labels, max_len).unwrap();
        prop_assert_eq!(seq.ids.len(), seq.label_ids.len());
        prop_assert!(seq.ids.len() <= max_len);
        prop_assert_eq!(seq.ids[0], CLS_ID);
        prop_assert_eq!(*seq.ids.last().unwrap(), SEP_ID);
        let mut pos = 1;
        'walk: for (w, &l) in ws.iter().zip(&labels) {
            for id in model.encode_token(w) {
                if pos == seq.ids.len() - 1 {
                    prop_assert!(seq.truncated);
                    break 'walk;
                }
                prop_assert_eq!(seq.ids[pos], id);
                prop_assert_eq!(seq.label_ids[pos], l);
                pos += 1;
            }
        }
        prop_assert_eq!(pos, seq.ids.len() - 1);
    }

    #[test]
    fn masking_contract(ws in words(), seed in any::<u64>(), rate in 0.0f64..0.9) {
        let model = train_subword(&[ws.clone()], opts(5)).unwrap();
        let seq = model.encode(&ws, &vec![7; ws.len()]).unwrap();
        let k = seq.content_len();
        let m = mask_for_mlm(&seq, rate, seed).unwrap();
        let expect = if rate > 0.0 { ((rate * k as f64).round() as usize).max(1).min(k) } else { 0 };
        prop_assert_eq!(m.mask_positions.len(), expect);
        prop_assert_eq!(mask_count(k, rate), expect);
        prop_assert!(m.mask_positions.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(m.mask_positions.iter().all(|&p| (1..=k).contains(&p)));
        let mut restored = m.ids.clone();
        for (&p, &orig) in m.mask_positions.iter().zip(&m.originals_at_mask) {
            prop_assert_eq!(m.ids[p], MASK_ID);
            restored[p] = orig;
        }
        prop_assert_eq!(restored, seq.ids.clone());
        prop_assert_eq!(&m.label_ids, &seq.label_ids);
        prop_assert_eq!(mask_for_mlm(&seq, rate, seed).unwrap().mask_positions, m.mask_positions);
    }
}
