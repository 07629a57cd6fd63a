"""Offline fixture models with the native hidden sizes of the three supported models.

HuggingFace hub access is not assumed anywhere in this suite: tiny randomly
initialized checkpoints are built on disk and passed via --model-path.
"""

import json

import pytest
import torch
from tokenizers import Tokenizer, decoders, normalizers, pre_tokenizers, processors
from tokenizers.models import BPE, WordPiece
from transformers import (
    BertConfig,
    BertModel,
    PreTrainedTokenizerFast,
    RobertaConfig,
    RobertaModel,
)

WORDPIECE_VOCAB = (
    ["[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"]
    + [chr(c) for c in range(ord("a"), ord("z") + 1)]
    + ["##" + chr(c) for c in range(ord("a"), ord("z") + 1)]
    + ["attack", "send", "packet", "inject", "queri", "databas", "buffer", "overflow"]
)


def build_tiny_bert(directory, hidden_size: int, seed: int) -> None:
    directory.mkdir(parents=True)
    vocab = {word: i for i, word in enumerate(WORDPIECE_VOCAB)}
    backend = Tokenizer(WordPiece(vocab=vocab, unk_token="[UNK]"))
    backend.normalizer = normalizers.BertNormalizer(lowercase=True)
    backend.pre_tokenizer = pre_tokenizers.BertPreTokenizer()
    backend.post_processor = processors.TemplateProcessing(
        single="[CLS] $A [SEP]",
        pair="[CLS] $A [SEP] $B [SEP]",
        special_tokens=[("[CLS]", vocab["[CLS]"]), ("[SEP]", vocab["[SEP]"])],
    )
    tokenizer = PreTrainedTokenizerFast(
        tokenizer_object=backend,
        unk_token="[UNK]",
        pad_token="[PAD]",
        cls_token="[CLS]",
        sep_token="[SEP]",
        mask_token="[MASK]",
    )
    config = BertConfig(
        vocab_size=len(WORDPIECE_VOCAB),
        hidden_size=hidden_size,
        num_hidden_layers=1,
        num_attention_heads=4,
        intermediate_size=2 * hidden_size // 3,
        max_position_embeddings=128,
    )
    torch.manual_seed(seed)
    model = BertModel(config)
    model.save_pretrained(directory)
    tokenizer.save_pretrained(directory)


def build_tiny_roberta(directory, hidden_size: int, seed: int) -> None:
    directory.mkdir(parents=True)
    byte_symbols = sorted(pre_tokenizers.ByteLevel.alphabet())
    specials = ["<s>", "<pad>", "</s>", "<unk>", "<mask>"]
    vocab = {token: i for i, token in enumerate(specials + byte_symbols)}
    tokenizer = Tokenizer(BPE(vocab=vocab, merges=[], unk_token="<unk>"))
    tokenizer.pre_tokenizer = pre_tokenizers.ByteLevel(add_prefix_space=False)
    tokenizer.decoder = decoders.ByteLevel()
    tokenizer.post_processor = processors.RobertaProcessing(
        sep=("</s>", vocab["</s>"]), cls=("<s>", vocab["<s>"])
    )
    fast = PreTrainedTokenizerFast(
        tokenizer_object=tokenizer,
        bos_token="<s>",
        eos_token="</s>",
        unk_token="<unk>",
        pad_token="<pad>",
        cls_token="<s>",
        sep_token="</s>",
        mask_token="<mask>",
    )
    fast.save_pretrained(directory)
    config = RobertaConfig(
        vocab_size=len(vocab),
        hidden_size=hidden_size,
        num_hidden_layers=1,
        num_attention_heads=4,
        intermediate_size=2 * hidden_size // 3,
        max_position_embeddings=130,
    )
    torch.manual_seed(seed)
    model = RobertaModel(config)
    model.save_pretrained(directory)


def build_tiny_native_st(directory, base_directory, hidden_size: int) -> None:
    """A sentence-transformers-native model dir with built-in mean pooling."""
    from sentence_transformers import SentenceTransformer, models

    word = models.Transformer(str(base_directory))
    pooling = models.Pooling(hidden_size, pooling_mode="mean")
    SentenceTransformer(modules=[word, pooling], device="cpu").save(str(directory))


@pytest.fixture(scope="session")
def model_paths(tmp_path_factory):
    root = tmp_path_factory.mktemp("tiny-models")
    bert_dir = root / "bert-base-uncased"
    build_tiny_bert(bert_dir, hidden_size=768, seed=0)

    roberta_dir = root / "roberta-base"
    build_tiny_roberta(roberta_dir, hidden_size=768, seed=1)

    minilm_base = root / "minilm-base"
    build_tiny_bert(minilm_base, hidden_size=384, seed=2)
    minilm_dir = root / "paraphrase-multilingual-MiniLM-L12-v2"
    build_tiny_native_st(minilm_dir, minilm_base, hidden_size=384)

    return {
        "bert-base-uncased": bert_dir,
        "roberta-base": roberta_dir,
        "paraphrase-multilingual-MiniLM-L12-v2": minilm_dir,
    }


@pytest.fixture()
def dataset_file(tmp_path):
    path = tmp_path / "dataset.jsonl"
    rows = [
        {"doc_id": "66:CVE-2020-0001", "capec_id": 66, "text": "inject queri databas", "label": "CVE-2020-0001"},
        {"doc_id": "67:CVE-2020-0002", "capec_id": 67, "text": "buffer overflow attack", "label": "CVE-2020-0002"},
        {"doc_id": "68:CVE-2020-0003", "capec_id": 68, "text": "attack send packet", "label": "CVE-2020-0003"},
        {"doc_id": "69:CVE-2020-0004", "capec_id": 69, "text": "attack send packet", "label": "CVE-2020-0004"},
    ]
    path.write_text("\n".join(json.dumps(r) for r in rows) + "\n")
    return path
