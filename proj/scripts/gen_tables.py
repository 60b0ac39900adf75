#!/usr/bin/env python3
"""Writes data/*.tsv and the embedded copy in include/editkit/default_tables.hpp."""
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent

ONES = ["zero", "one", "two", "three", "four", "five", "six", "seven", "eight",
        "nine", "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen",
        "sixteen", "seventeen", "eighteen", "nineteen"]
TENS = ["", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy",
        "eighty", "ninety"]


def number_words():
    rows = [(w, str(i)) for i, w in enumerate(ONES)]
    for t in range(2, 10):
        rows.append((TENS[t], str(t * 10)))
        for u in range(1, 10):
            rows.append((f"{TENS[t]}-{ONES[u]}", str(t * 10 + u)))
    return rows


STATES = ["alabama", "alaska", "arizona", "arkansas", "california", "colorado",
          "connecticut", "delaware", "florida", "georgia", "hawaii", "idaho",
          "illinois", "indiana", "iowa", "kansas", "kentucky", "louisiana",
          "maine", "maryland", "massachusetts", "michigan", "minnesota",
          "mississippi", "missouri", "montana", "nebraska", "nevada",
          "new hampshire", "new jersey", "new mexico", "new york",
          "north carolina", "north dakota", "ohio", "oklahoma", "oregon",
          "pennsylvania", "rhode island", "south carolina", "south dakota",
          "tennessee", "texas", "utah", "vermont", "virginia", "washington",
          "west virginia", "wisconsin", "wyoming"]

# Two-letter codes that are not also common English words or abbreviations
# claimed by another table ("in", "or", "me", "mt", "ct", ...).
STATE_CODES = {
    "ak": "alaska", "az": "arizona", "ar": "arkansas", "ca": "california",
    "fl": "florida", "ga": "georgia", "ia": "iowa", "il": "illinois",
    "ks": "kansas", "ky": "kentucky", "md": "maryland", "mi": "michigan",
    "mn": "minnesota", "nc": "north carolina", "nd": "north dakota",
    "ne": "nebraska", "nh": "new hampshire", "nj": "new jersey",
    "nm": "new mexico", "nv": "nevada", "ny": "new york", "ri": "rhode island",
    "sc": "south carolina", "sd": "south dakota", "tn": "tennessee",
    "tx": "texas", "ut": "utah", "va": "virginia", "vt": "vermont",
    "wa": "washington", "wi": "wisconsin", "wv": "west virginia",
    "wy": "wyoming",
}

CITIES = {
    "los angeles": ["la", "l.a.", "los angeles"],
    "new york city": ["nyc", "n.y.c.", "new york city", "big apple"],
    "san francisco": ["sf", "san fran", "frisco", "san francisco"],
    "las vegas": ["vegas", "las vegas", "sin city"],
    "philadelphia": ["philly"],
    "washington dc": ["dc", "d.c.", "washington dc", "washington d.c."],
    "new orleans": ["nola", "new orleans"],
    "salt lake city": ["slc", "salt lake city", "salt lake"],
    "kansas city": ["kc", "kansas city"],
    "atlanta": ["atl"],
    "chicago": ["windy city", "chi-town"],
    "boston": ["beantown"],
    "saint louis": ["st. louis", "st louis", "saint louis"],
    "saint paul": ["st. paul", "st paul", "saint paul"],
    "fort worth": ["ft. worth", "ft worth", "fort worth"],
    "fort lauderdale": ["ft. lauderdale", "ft lauderdale", "fort lauderdale"],
    "san diego": ["san diego"],
    "san jose": ["san jose"],
    "san antonio": ["san antonio"],
    "santa clara": ["santa clara"],
    "santa monica": ["santa monica"],
    "santa barbara": ["santa barbara"],
    "santa cruz": ["santa cruz"],
    "palo alto": ["palo alto"],
    "mountain view": ["mountain view"],
    "long beach": ["long beach"],
    "el paso": ["el paso"],
    "oklahoma city": ["oklahoma city", "okc"],
    "jersey city": ["jersey city"],
    "virginia beach": ["virginia beach"],
    "colorado springs": ["colorado springs"],
    "baton rouge": ["baton rouge"],
    "des moines": ["des moines"],
    "new delhi": ["new delhi"],
    "mexico city": ["mexico city", "cdmx"],
    "hong kong": ["hong kong"],
    "buenos aires": ["buenos aires"],
    "cape town": ["cape town"],
    "tel aviv": ["tel aviv"],
    "kuala lumpur": ["kuala lumpur", "kl"],
    "sao paulo": ["sao paulo", "são paulo"],
    "rio de janeiro": ["rio de janeiro", "rio"],
    "abu dhabi": ["abu dhabi"],
    "san juan": ["san juan"],
    "saint petersburg": ["st petersburg", "saint petersburg"],
    "minneapolis": ["mpls"],
    "indianapolis": ["indy"],
    "cincinnati": ["cincy"],
    "albuquerque": ["abq"],
    "jacksonville": ["jax"],
}


def place_aliases():
    rows = []
    for s in STATES:
        rows.append((s, s))
    for code, s in STATE_CODES.items():
        rows.append((code, s))
    for canon, surfaces in CITIES.items():
        for surf in surfaces:
            rows.append((surf, canon))
    seen = {}
    out = []
    for k, v in rows:
        if k in seen:
            continue
        seen[k] = v
        out.append((k, v))
    return out


ABBREVIATIONS = [
    ("st", "street"), ("str", "street"), ("ave", "avenue"), ("av", "avenue"),
    ("blvd", "boulevard"), ("rd", "road"), ("dr", "drive"), ("ln", "lane"),
    ("hwy", "highway"), ("pkwy", "parkway"), ("ct", "court"), ("pl", "place"),
    ("sq", "square"), ("mt", "mount"), ("ft", "fort"), ("apt", "apartment"),
    ("bldg", "building"), ("ste", "suite"), ("hts", "heights"),
    ("intl", "international"), ("int'l", "international"),
    ("ctr", "center"), ("fwy", "freeway"), ("expy", "expressway"),
    ("$", "dollar"), ("usd", "dollar"), ("€", "euro"), ("eur", "euro"),
    ("£", "pound"), ("gbp", "pound"), ("¥", "yen"), ("jpy", "yen"),
    ("₹", "rupee"), ("inr", "rupee"), ("cad", "canadian dollar"),
    ("aud", "australian dollar"),
]


STOPWORDS = """
a about above after again against all also am an and any are aren't as at be
because been before being below between both but by can can't cannot could
couldn't did didn't do does doesn't doing don't down during each few for from
further had hadn't has hasn't have haven't having he he'd he'll he's her here
here's hers herself him himself his how how's i i'd i'll i'm i've if in into is
isn't it it's its itself just let's like me more most mustn't my myself no nor
not now of off on once only or other ought our ours ourselves out over own
please same shan't she she'd she'll she's should shouldn't so some such than
that that's the their theirs them themselves then there there's these they
they'd they'll they're they've this those through to too under until up very
was wasn't we we'd we'll we're we've were weren't what what's when when's where
where's which while who who's whom why why's will with won't would wouldn't
you you'd you'll you're you've your yours yourself yourselves 'll 're 've 'd
'm 's n't
""".split()


def write_tsv(name, rows):
    path = ROOT / "data" / name
    text = "".join(f"{k}\t{v}\n" for k, v in rows)
    path.write_text(text, encoding="utf-8")
    return text


def main():
    texts = {
        "number_words": write_tsv("number_words.tsv", number_words()),
        "place_aliases": write_tsv("place_aliases.tsv", place_aliases()),
        "abbreviations": write_tsv("abbreviations.tsv", ABBREVIATIONS),
    }
    stop_text = "".join(w + "\n" for w in STOPWORDS)
    (ROOT / "data" / "stopwords.txt").write_text(stop_text, encoding="utf-8")
    texts["stopwords"] = stop_text
    hdr = ["#pragma once", "",
           "// Generated by scripts/gen_tables.py from the same rows as data/*.tsv.",
           "", "#include <string_view>", "",
           "namespace editkit::default_tsv {", ""]
    for name, text in texts.items():
        hdr.append(f'inline constexpr std::string_view k_{name} = R"tsv({text})tsv";')
        hdr.append("")
    hdr.append("}  // namespace editkit::default_tsv")
    (ROOT / "include" / "editkit" / "default_tables.hpp").write_text(
        "\n".join(hdr) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
