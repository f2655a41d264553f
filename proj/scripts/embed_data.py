#!/usr/bin/env python3
"""Regenerate the embedded copies of the bundled data files.

Reads data/emoji_names.tsv and data/familiar_words.txt and emits
src/emoji_names_data.cpp and src/familiar_words_data.cpp so the library
works without any files on disk.  Run from the repository root after
editing either data file.
"""
import pathlib

root = pathlib.Path(__file__).resolve().parent.parent


def emit_emoji_names() -> None:
    rows = []
    for line in (root / "data" / "emoji_names.tsv").read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        seq_hex, name = line.split("\t")
        cps = [int(h, 16) for h in seq_hex.split("-")]
        if len(cps) > 7:
            raise SystemExit(f"sequence too long: {seq_hex}")
        rows.append((cps, name))
    out = [
        "// Generated by scripts/embed_data.py from data/emoji_names.tsv; do not edit.",
        '#include "demoji/emoji_name_data.hpp"',
        "",
        "namespace demoji::emoji {",
        "",
        "const EmojiNameRow k_emoji_name_rows[] = {",
    ]
    for cps, name in rows:
        seq = ", ".join(f"0x{cp:04X}" for cp in cps)
        pad = ", ".join(["0"] * (8 - len(cps)))
        out.append(f'    {{{{{seq}, {pad}}}, "{name}"}},')
    out.append("};")
    out.append("")
    out.append(
        "const std::size_t k_emoji_name_row_count = sizeof(k_emoji_name_rows) / sizeof(k_emoji_name_rows[0]);"
    )
    out.append("")
    out.append("}  // namespace demoji::emoji")
    (root / "src" / "emoji_names_data.cpp").write_text("\n".join(out) + "\n")
    print(f"emoji_names_data.cpp: {len(rows)} rows")


def emit_familiar_words() -> None:
    words = []
    for line in (root / "data" / "familiar_words.txt").read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        words.append(line)
    out = [
        "// Generated by scripts/embed_data.py from data/familiar_words.txt; do not edit.",
        '#include "demoji/familiar_word_data.hpp"',
        "",
        "namespace demoji::readability {",
        "",
        "// newline separated, lowercase",
        "const char* k_familiar_words_raw =",
    ]
    chunk = 24
    for i in range(0, len(words), chunk):
        seg = "\\n".join(words[i : i + chunk])
        tail = "" if i + chunk >= len(words) else ""
        out.append(f'    "{seg}\\n"{tail}')
    out[-1] += ";"
    out.append("")
    out.append("}  // namespace demoji::readability")
    (root / "src" / "familiar_words_data.cpp").write_text("\n".join(out) + "\n")
    print(f"familiar_words_data.cpp: {len(words)} words")


if __name__ == "__main__":
    emit_emoji_names()
    emit_familiar_words()
