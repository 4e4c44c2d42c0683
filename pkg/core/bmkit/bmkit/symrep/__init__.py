from bmkit.symrep.kostka import (
  KostkaMatrix,
  PartitionMatrix,
  kostka,
  kostka_matrix,
  kostka_oracle,
  hook_length_count,
  inverse_kostka_matrix,
)
from bmkit.symrep.characters import CharacterTable, z, sign, character, class_size, character_table
from bmkit.symrep.littlewood_richardson import lr_mult, lr_coefficient, lr_mult_tableau

__all__ = [
  "CharacterTable",
  "KostkaMatrix",
  "PartitionMatrix",
  "character",
  "character_table",
  "class_size",
  "hook_length_count",
  "inverse_kostka_matrix",
  "kostka",
  "kostka_matrix",
  "kostka_oracle",
  "lr_coefficient",
  "lr_mult",
  "lr_mult_tableau",
  "sign",
  "z",
]
