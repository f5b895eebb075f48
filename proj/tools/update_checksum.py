#!/usr/bin/env python3
"""Rewrite the checksum line of a constants file after editing its body."""
import sys

PREFIX = "# checksum fnv1a64 "


def fnv1a64(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return h


def main(path: str) -> None:
    with open(path, "rb") as f:
        text = f.read()
    if text.startswith(PREFIX.encode()):
        text = text[text.index(b"\n") + 1 :]
    line = f"{PREFIX}{fnv1a64(text):016x}\n".encode()
    with open(path, "wb") as f:
        f.write(line + text)
    print(line.decode().strip())


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/k7p_constants.txt")
