#!/usr/bin/env python3
# Copyright 2026 The N2T Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Builds data/fixtures/mini_gazetteer.tsv from the GeoNames city tables
shipped with the `geonamescache` package.

City rows keep the GeoNames id, name, coordinates, country code and
population. Country rows use the GeoNames country id and population with
a rounded centroid. Output is the 19-column GeoNames main-export layout.

    pip install geonamescache
    python3 tools/fixtures/make_mini_gazetteer.py > data/fixtures/mini_gazetteer.tsv
"""

import json
import os
import sys
import unicodedata

import geonamescache

TARGET_ROWS = 500

# iso -> (lat, lon, extra alternate names, canonical override)
COUNTRIES = {
    "SY": (35.0, 38.0, ["Syrian Arab Republic"], None),
    "LB": (33.83333, 35.83333, ["Lebanese Republic"], None),
    "TR": (39.0, 35.0, ["Turkey", "Turkiye", "Republic of Turkey"], "Türkiye"),
    "GR": (39.0, 22.0, ["Hellas", "Hellenic Republic"], None),
    "MK": (41.66667, 21.75, ["Macedonia"], None),
    "RS": (44.0, 21.0, ["Republic of Serbia"], None),
    "HU": (47.0, 20.0, ["Magyarorszag"], None),
    "AT": (47.33333, 13.33333, ["Osterreich", "Österreich"], None),
    "DE": (51.5, 10.5, ["Deutschland"], None),
    "SE": (62.0, 15.0, ["Sverige"], None),
    "IT": (42.83333, 12.83333, ["Italia"], None),
    "LY": (28.0, 17.0, ["State of Libya"], None),
    "NE": (18.0, 9.0, ["Republic of Niger"], None),
    "ER": (15.0, 39.0, ["State of Eritrea"], None),
    "SD": (16.0, 30.0, ["Republic of the Sudan"], None),
    "ET": (9.0, 39.5, ["Ityop'iya"], None),
    "RO": (46.0, 25.0, ["România", "Rumania"], None),
    "GB": (54.75844, -2.69531, ["Great Britain", "Britain", "UK"], None),
    "MX": (23.0, -102.0, ["Mexico", "México", "United Mexican States"], None),
    "GT": (15.5, -90.25, ["Republic of Guatemala"], None),
    "HN": (15.0, -86.5, ["Republic of Honduras"], None),
    "US": (39.76, -98.5, ["United States of America", "USA"], None),
    "NP": (28.0, 84.0, ["Federal Democratic Republic of Nepal"], None),
    "IN": (22.0, 79.0, ["Bharat", "Republic of India"], None),
    "AE": (24.0, 54.0, ["UAE", "Emirates"], None),
    "QA": (25.5, 51.25, ["State of Qatar"], None),
    "SA": (25.0, 45.0, ["Kingdom of Saudi Arabia"], None),
    "MY": (2.5, 112.5, ["Federation of Malaysia"], None),
    "BD": (24.0, 90.0, ["People's Republic of Bangladesh"], None),
    "FR": (46.0, 2.0, ["French Republic"], None),
    "NL": (52.25, 5.75, ["The Netherlands", "Holland"], "Netherlands"),
    "JO": (31.0, 36.0, ["Hashemite Kingdom of Jordan"], None),
    "IQ": (33.0, 44.0, ["Republic of Iraq"], None),
    "BG": (42.66667, 25.25, ["Republic of Bulgaria"], None),
    "HR": (45.16667, 15.5, ["Hrvatska"], None),
    "SI": (46.08333, 15.0, ["Slovenija"], None),
    "CH": (47.00016, 8.01427, ["Swiss Confederation"], None),
    "ES": (40.0, -4.0, ["Espana", "España"], None),
    "MA": (32.0, -6.0, ["Kingdom of Morocco"], None),
    "NG": (10.0, 8.0, ["Federal Republic of Nigeria"], None),
    "BA": (44.25, 17.83333, ["Bosnia-Herzegovina", "Bosnia"], None),
}

# (name, country) pairs resolved against cities500 by highest population
ROUTE_CITIES = [
    ("Aleppo", "SY"), ("Damascus", "SY"), ("Homs", "SY"), ("Ḩamāh", "SY"),
    ("Idlib", "SY"), ("Deir ez-Zor", "SY"), ("Ar Raqqah", "SY"), ("Latakia", "SY"),
    ("Beirut", "LB"), ("Tripoli", "LB"), ("Sidon", "LB"), ("Tyre", "LB"),
    ("Zahlé", "LB"), ("Byblos", "LB"),
    ("Istanbul", "TR"), ("İzmir", "TR"), ("Çeşme", "TR"), ("Bodrum", "TR"),
    ("Gaziantep", "TR"), ("Kilis", "TR"), ("Reyhanlı", "TR"), ("Antakya", "TR"),
    ("Mersin", "TR"), ("Adana", "TR"), ("Edirne", "TR"), ("Ankara", "TR"),
    ("Ayvalık", "TR"),
    ("Athens", "GR"), ("Thessaloníki", "GR"), ("Mytilene", "GR"), ("Chios", "GR"),
    ("Kos", "GR"),
    ("Skopje", "MK"), ("Gevgelija", "MK"),
    ("Belgrade", "RS"), ("Preševo", "RS"), ("Subotica", "RS"),
    ("Budapest", "HU"), ("Vienna", "AT"), ("Salzburg", "AT"),
    ("Munich", "DE"), ("Berlin", "DE"), ("Hamburg", "DE"),
    ("Frankfurt am Main", "DE"), ("Passau", "DE"),
    ("Malmö", "SE"), ("Stockholm", "SE"),
    ("Rome", "IT"), ("Milan", "IT"), ("Catania", "IT"), ("Palermo", "IT"),
    ("Lampedusa", "IT"), ("Ventimiglia", "IT"), ("Trieste", "IT"),
    ("Tripoli", "LY"), ("Sabha", "LY"), ("Şabrātah", "LY"),
    ("Niamey", "NE"), ("Agadez", "NE"),
    ("Asmara", "ER"), ("Khartoum", "SD"), ("Addis Ababa", "ET"),
    ("Bucharest", "RO"), ("Iaşi", "RO"), ("Vaslui", "RO"), ("Timişoara", "RO"),
    ("London", "GB"), ("Birmingham", "GB"), ("Manchester", "GB"), ("Dover", "GB"),
    ("Paris", "FR"), ("Calais", "FR"),
    ("San Pedro Sula", "HN"), ("Tegucigalpa", "HN"), ("Guatemala City", "GT"),
    ("Tapachula", "MX"), ("Mexico City", "MX"), ("Ciudad Juárez", "MX"),
    ("El Paso", "US"), ("Houston", "US"), ("New York City", "US"),
    ("Kathmandu", "NP"), ("New Delhi", "IN"), ("Doha", "QA"), ("Dubai", "AE"),
    ("Kuala Lumpur", "MY"), ("Dhaka", "BD"),
    ("Sarajevo", "BA"), ("Bihać", "BA"), ("Velika Kladuša", "BA"),
    ("Zagreb", "HR"), ("Ljubljana", "SI"),
]

# Places whose names collide with ordinary words or with other places.
COLLISIONS = [4717560, 4647963, 4180386, 4879018, 4115181, 5976783, 741240,
              2759040, 1278969, 2643071]

FILL_COUNTRIES = ["SY", "LB", "TR", "GR", "MK", "RS", "HU", "AT", "DE", "IT",
                  "LY", "RO", "GB", "ER", "SD", "ET", "NE", "HN", "GT", "MX",
                  "NP", "QA", "AE", "MY", "BD", "JO", "IQ", "BA", "HR", "SI"]

SUPPLEMENT = {"ß": "ss", "Æ": "AE", "æ": "ae", "Ø": "O", "ø": "o", "Đ": "D",
              "đ": "d", "Þ": "Th", "þ": "th", "ı": "i", "Ł": "L", "ł": "l"}


def ascii_fold(name):
    out = []
    for ch in name:
        if ch in SUPPLEMENT:
            out.append(SUPPLEMENT[ch])
            continue
        base = "".join(c for c in unicodedata.normalize("NFD", ch)
                       if unicodedata.category(c) != "Mn")
        out.append(base)
    return "".join(out)


def keep_alternate(alt):
    if not alt or "\t" in alt or "," in alt:
        return False
    if alt.isascii() and alt.upper() == alt and len(alt) <= 3:
        return False  # airport and postal codes
    folded = ascii_fold(alt)
    if folded.isascii() and not any(c.isupper() for c in folded):
        return False  # lowercase romanization keys
    return True


def row(gid, name, alts, lat, lon, fclass, fcode, cc, pop, tz):
    alts = [a for a in dict.fromkeys(alts) if a != name and keep_alternate(a)]
    fields = [str(gid), name, ascii_fold(name), ",".join(alts[:40]),
              repr(float(lat)), repr(float(lon)), fclass, fcode, cc, "", "",
              "", "", "", str(pop), "", "", tz, "2024-01-01"]
    assert len(fields) == 19
    return "\t".join(fields)


def main():
    data = os.path.join(os.path.dirname(geonamescache.__file__), "data")
    cities = json.load(open(os.path.join(data, "cities500.json"), encoding="utf-8"))
    countries = json.load(open(os.path.join(data, "countries.json"), encoding="utf-8"))
    big = json.load(open(os.path.join(data, "cities15000.json"), encoding="utf-8"))

    rows = []
    seen = set()
    capitals = {c["capital"] for c in countries.values()}

    def add_city(c):
        gid = int(c["geonameid"])
        if gid in seen:
            return
        seen.add(gid)
        code = "PPLC" if c["name"] in capitals else "PPL"
        rows.append(row(gid, c["name"], c.get("alternatenames", []),
                        c["latitude"], c["longitude"], "P", code,
                        c["countrycode"], c["population"], c["timezone"]))

    for iso, (lat, lon, extra, override) in COUNTRIES.items():
        c = countries[iso]
        name = override or c["name"]
        alts = list(extra)
        if override:
            alts.append(c["name"])
        seen.add(int(c["geonameid"]))
        rows.append(row(c["geonameid"], name, alts, lat, lon, "A", "PCLI", iso,
                        c["population"], ""))

    by_key = {}
    for c in cities.values():
        by_key.setdefault((c["name"], c["countrycode"]), []).append(c)
    for name, cc in ROUTE_CITIES:
        cands = by_key.get((name, cc))
        if not cands:
            sys.exit(f"missing route city {name} {cc}")
        add_city(max(cands, key=lambda c: (c["population"], -int(c["geonameid"]))))

    by_id = {int(c["geonameid"]): c for c in cities.values()}
    for gid in COLLISIONS:
        add_city(by_id[gid])

    fill = sorted((c for c in big.values() if c["countrycode"] in FILL_COUNTRIES),
                  key=lambda c: (-c["population"], int(c["geonameid"])))
    for c in fill:
        if len(rows) >= TARGET_ROWS:
            break
        add_city(c)

    sys.stdout.write("\n".join(rows) + "\n")


if __name__ == "__main__":
    main()
