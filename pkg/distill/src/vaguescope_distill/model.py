"""A small transformer regressor trained from scratch on exported scores.

No pretrained weights are assumed: the encoder is a two-layer bidirectional
transformer over a vocabulary built from the training pairs.  It predicts a
single sentence-level ratio (subjective, factual, or detail-vs-vagueness)
with a mean squared error objective.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, asdict, field
from pathlib import Path

import numpy as np
import torch
from torch import nn

from .data import PairRecord

PAD_ID = 0
UNK_ID = 1


@dataclass
class ModelConfig:
    target: str = "subjective"
    embed_dim: int = 64
    num_layers: int = 2
    num_heads: int = 4
    ffn_dim: int = 128
    max_len: int = 64
    dropout: float = 0.1
    batch_size: int = 32
    learning_rate: float = 1e-3
    epochs: int = 30
    seed: int = 42
    vocab: dict[str, int] = field(default_factory=dict)


def build_vocab(records: list[PairRecord], min_count: int = 1) -> dict[str, int]:
    counts: dict[str, int] = {}
    for record in records:
        for token in record.tokens:
            key = token.lower()
            counts[key] = counts.get(key, 0) + 1
    vocab = {"<pad>": PAD_ID, "<unk>": UNK_ID}
    for token in sorted(counts):
        if counts[token] >= min_count:
            vocab[token] = len(vocab)
    return vocab


class ScoreRegressor(nn.Module):
    def __init__(self, config: ModelConfig):
        super().__init__()
        if not config.vocab:
            raise ValueError("config.vocab must be populated before model construction")
        self.config = config
        self.embed = nn.Embedding(len(config.vocab), config.embed_dim, padding_idx=PAD_ID)
        self.position = nn.Embedding(config.max_len, config.embed_dim)
        layer = nn.TransformerEncoderLayer(
            d_model=config.embed_dim,
            nhead=config.num_heads,
            dim_feedforward=config.ffn_dim,
            dropout=config.dropout,
            batch_first=True,
        )
        self.encoder = nn.TransformerEncoder(layer, num_layers=config.num_layers)
        self.head = nn.Linear(config.embed_dim, 1)

    def encode_tokens(self, tokens: list[str]) -> list[int]:
        vocab = self.config.vocab
        ids = [vocab.get(t.lower(), UNK_ID) for t in tokens[: self.config.max_len]]
        return ids or [PAD_ID]

    def forward(self, ids: torch.Tensor, mask: torch.Tensor) -> torch.Tensor:
        positions = torch.arange(ids.size(1), device=ids.device).unsqueeze(0)
        hidden = self.embed(ids) + self.position(positions)
        hidden = self.encoder(hidden, src_key_padding_mask=~mask)
        weights = mask.unsqueeze(-1).float()
        denom = weights.sum(dim=1).clamp(min=1.0)
        pooled = (hidden * weights).sum(dim=1) / denom
        return self.head(pooled).squeeze(-1)

    @torch.no_grad()
    def predict(self, token_lists: list[list[str]], batch_size: int = 256) -> np.ndarray:
        """Predict scores for a batch of tokenized sentences."""
        self.eval()
        out: list[np.ndarray] = []
        for start in range(0, len(token_lists), batch_size):
            chunk = token_lists[start : start + batch_size]
            ids, mask = _pad_batch([self.encode_tokens(t) for t in chunk])
            out.append(self(ids, mask).numpy())
        return np.concatenate(out) if out else np.empty(0)


def _pad_batch(id_lists: list[list[int]]) -> tuple[torch.Tensor, torch.Tensor]:
    width = max(len(ids) for ids in id_lists)
    ids = torch.full((len(id_lists), width), PAD_ID, dtype=torch.long)
    mask = torch.zeros((len(id_lists), width), dtype=torch.bool)
    for row, seq in enumerate(id_lists):
        ids[row, : len(seq)] = torch.tensor(seq, dtype=torch.long)
        mask[row, : len(seq)] = True
    return ids, mask


def train_regressor(
    records: list[PairRecord],
    config: ModelConfig,
    log: bool = False,
) -> ScoreRegressor:
    """Train a regressor on the given pairs for ``config.target``.

    Pairs whose target is undefined (detail-vs-vagueness on sentences with
    neither detail nor vagueness) are skipped.
    """
    usable = [r for r in records if r.target(config.target) is not None]
    if len(usable) < 100:
        raise ValueError(
            f"need at least 100 pairs with a defined {config.target!r} target,"
            f" got {len(usable)}"
        )
    if not config.vocab:
        config.vocab = build_vocab(usable)

    torch.manual_seed(config.seed)
    model = ScoreRegressor(config)
    optimizer = torch.optim.Adam(model.parameters(), lr=config.learning_rate)
    loss_fn = nn.MSELoss()

    encoded = [model.encode_tokens(r.tokens) for r in usable]
    targets = torch.tensor(
        [r.target(config.target) for r in usable], dtype=torch.float32
    )
    rng = np.random.default_rng(config.seed)
    order = np.arange(len(usable))

    model.train()
    for epoch in range(config.epochs):
        rng.shuffle(order)
        total = 0.0
        for start in range(0, len(order), config.batch_size):
            batch = order[start : start + config.batch_size]
            ids, mask = _pad_batch([encoded[i] for i in batch])
            optimizer.zero_grad()
            preds = model(ids, mask)
            loss = loss_fn(preds, targets[batch])
            loss.backward()
            optimizer.step()
            total += loss.item() * len(batch)
        if log:
            print(f"epoch {epoch + 1}/{config.epochs} mse={total / len(order):.6f}")
    model.eval()
    return model


def save_model(model: ScoreRegressor, directory: str | Path) -> None:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    config = asdict(model.config)
    (directory / "config.json").write_text(
        json.dumps(config, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    torch.save(model.state_dict(), directory / "weights.pt")


def load_model(directory: str | Path) -> ScoreRegressor:
    directory = Path(directory)
    config = ModelConfig(**json.loads((directory / "config.json").read_text(encoding="utf-8")))
    model = ScoreRegressor(config)
    model.load_state_dict(torch.load(directory / "weights.pt", weights_only=True))
    model.eval()
    return model
