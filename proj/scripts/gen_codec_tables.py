#!/usr/bin/env python3
"""Regenerate the bundled single-byte codec tables.

Dumps one .tbl file per codec under data/codecs/ and a compiled-in copy as
src/codec_table_data.cpp, using the host Python codec database as the
authoritative chart source.  Charts that map two bytes to the same codepoint
(cp875, cp1006) are sanitized: the lowest byte keeps the mapping, the rest
become UNDEF, so encode and decode stay mutual inverses.

Run from the repository root:  python3 scripts/gen_codec_tables.py
"""

import os
import sys

SINGLE_BYTE = [
    "ascii", "cp037", "cp273", "cp424", "cp437", "cp500", "cp720", "cp737",
    "cp775", "cp850", "cp852", "cp855", "cp856", "cp857", "cp858", "cp860",
    "cp861", "cp862", "cp863", "cp864", "cp865", "cp866", "cp869", "cp874",
    "cp875", "cp1006", "cp1026", "cp1125", "cp1140", "cp1250", "cp1251",
    "cp1252", "cp1253", "cp1254", "cp1255", "cp1256", "cp1257", "cp1258",
    "latin_1", "iso8859_2", "iso8859_3", "iso8859_4", "iso8859_5",
    "iso8859_6", "iso8859_7", "iso8859_8", "iso8859_9", "iso8859_10",
    "iso8859_11", "iso8859_13", "iso8859_14", "iso8859_15", "iso8859_16",
    "koi8_r", "koi8_t", "koi8_u", "kz1048", "mac_cyrillic", "mac_greek",
    "mac_iceland", "mac_latin2", "mac_roman", "mac_turkish", "ptcp154",
]

UNDEF = None


def dump_table(name):
    rows = []
    for b in range(256):
        try:
            ch = bytes([b]).decode(name)
            assert len(ch) == 1
            rows.append(ord(ch))
        except Exception:
            rows.append(UNDEF)
    # sanitize duplicate targets: keep the lowest byte, undefine the rest
    seen = set()
    dropped = []
    for b in range(256):
        cp = rows[b]
        if cp is None:
            continue
        if cp in seen:
            rows[b] = UNDEF
            dropped.append(b)
        else:
            seen.add(cp)
    return rows, dropped


def write_tbl(path, name, rows):
    with open(path, "w") as f:
        f.write("# single-byte codec table, format version 1\n")
        f.write("# rows: <byte hex> <codepoint hex | UNDEF>\n")
        f.write(name + "\n")
        for b, cp in enumerate(rows):
            f.write("%02X %s\n" % (b, "UNDEF" if cp is None else "%04X" % cp))


def main():
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    tbl_dir = os.path.join(root, "data", "codecs")
    os.makedirs(tbl_dir, exist_ok=True)

    tables = []
    for name in SINGLE_BYTE:
        rows, dropped = dump_table(name)
        if dropped:
            print("sanitized %s: bytes %s set to UNDEF (duplicate targets)"
                  % (name, ", ".join("0x%02X" % b for b in dropped)),
                  file=sys.stderr)
        write_tbl(os.path.join(tbl_dir, name + ".tbl"), name, rows)
        tables.append((name, rows))

    cpp = os.path.join(root, "src", "codec_table_data.cpp")
    with open(cpp, "w") as f:
        f.write("// Generated by scripts/gen_codec_tables.py; do not edit.\n")
        f.write("// Mirrors the .tbl files under data/codecs/.\n\n")
        f.write("#include \"demoji/codec_table_data.hpp\"\n\n")
        f.write("namespace demoji::codecs {\n\n")
        f.write("const SingleByteTable k_single_byte_tables[] = {\n")
        for name, rows in tables:
            f.write("    {\"%s\",\n     {" % name)
            for i, cp in enumerate(rows):
                if i and i % 8 == 0:
                    f.write("\n      ")
                f.write("%s," % ("kUndef" if cp is None else "0x%04X" % cp))
            f.write("}},\n")
        f.write("};\n\n")
        f.write("const std::size_t k_single_byte_table_count = %d;\n\n"
                % len(tables))
        f.write("}  // namespace demoji::codecs\n")
    print("wrote %d tables -> %s, %s" % (len(tables), tbl_dir, cpp))


if __name__ == "__main__":
    main()
