#!/usr/bin/env python3
"""Regenerates src/catalog_data.cpp from data/builtin_catalog.json."""

import json
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent
TEMPLATE = '''#include "lgm/catalog.hpp"

namespace lgm {

// Generated by tools/embed_catalog.py from data/builtin_catalog.json;
// edit the JSON and regenerate rather than editing this string.
const char* builtin_catalog_json() {
    return R"lgmjson(%s)lgmjson";
}

}  // namespace lgm
'''


def main():
    text = (ROOT / "data" / "builtin_catalog.json").read_text()
    json.loads(text)  # fail fast on malformed data
    if ')lgmjson"' in text:
        raise SystemExit("data contains the raw string delimiter")
    (ROOT / "src" / "catalog_data.cpp").write_text(TEMPLATE % text)
    print("wrote src/catalog_data.cpp (%d bytes of JSON)" % len(text))


if __name__ == "__main__":
    main()
