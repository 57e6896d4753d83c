"""
Utility functions for JSON handling, weight-vector text and PRNG mixing
"""

import json
import re
from typing import Any, Dict, List


class JsonProcessor:
    """Utility class for deterministic JSON input and output"""

    @staticmethod
    def dumps(data: Any, indent: int = 2) -> str:
        """
        Serialize with sorted keys and a trailing newline

        Args:
            data: JSON-compatible data
            indent: JSON indentation level

        Returns:
            Byte-stable JSON text
        """
        return json.dumps(data, indent=indent, sort_keys=True, ensure_ascii=False) + "\n"

    @staticmethod
    def save_json(data: Dict[str, Any], file_path: str, indent: int = 2):
        """
        Save data to JSON file

        Args:
            data: Data to save
            file_path: Path to save file
            indent: JSON indentation level
        """
        with open(file_path, 'w', encoding='utf-8') as f:
            f.write(JsonProcessor.dumps(data, indent=indent))


class WeightText:
    """Parsing of weight vectors written as "2^5,1^2" or "2,2,2,2,2,1,1\""""

    _TERM = re.compile(r'^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$')

    @staticmethod
    def parse(text: str) -> List[int]:
        """
        Expand a weight vector text form

        Args:
            text: Comma separated terms, each "w" or "w^k"

        Returns:
            Expanded list of weights
        """
        weights: List[int] = []
        for term in text.split(','):
            match = WeightText._TERM.match(term)
            if not match:
                raise ValueError(f"Malformed weight term: '{term}'")
            weight = int(match.group(1))
            repeat = int(match.group(2)) if match.group(2) else 1
            weights.extend([weight] * repeat)
        return weights

    @staticmethod
    def format(weights: List[int]) -> str:
        """Compact "w^k" form of a weight list, runs kept in order"""
        terms = []
        i = 0
        while i < len(weights):
            j = i
            while j < len(weights) and weights[j] == weights[i]:
                j += 1
            run = j - i
            terms.append(f"{weights[i]}^{run}" if run > 1 else f"{weights[i]}")
            i = j
        return ",".join(terms)


MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """
    64-bit SplitMix generator

    state <- state + 0x9E3779B97F4A7C15 (mod 2^64)
    z <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 (mod 2^64)
    z <- (z ^ (z >> 27)) * 0x94D049BB133111EB (mod 2^64)
    output z ^ (z >> 31)
    """

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randbelow(self, n: int) -> int:
        """
        Uniform integer in [0, n) by rejection on 64-bit draws

        Args:
            n: Exclusive upper bound, 1 <= n <= 2^64
        """
        if n <= 0 or n > (1 << 64):
            raise ValueError(f"randbelow bound out of range: {n}")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next64()
            if x < limit:
                return x % n

    def randint(self, low: int, high: int) -> int:
        """Uniform integer in [low, high]"""
        return low + self.randbelow(high - low + 1)

    def choice(self, items):
        return items[self.randbelow(len(items))]

    def shuffled(self, items) -> list:
        """Fisher-Yates shuffle returning a new list"""
        out = list(items)
        for i in range(len(out) - 1, 0, -1):
            j = self.randbelow(i + 1)
            out[i], out[j] = out[j], out[i]
        return out


def mix_seed(seed: int, index: int) -> int:
    """Per-trial seed: first SplitMix64 output for state seed + index * gamma"""
    return SplitMix64((seed + index * GOLDEN_GAMMA) & MASK64).next64()
