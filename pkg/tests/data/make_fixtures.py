#!/usr/bin/env python3
"""Regenerate the committed fixture corpora. Deterministic: no RNG anywhere.

    python3 tests/data/make_fixtures.py

colon20.csv     20 colon-eligible titles (one case-folded prefix collision
                pair to exercise candidate rejection) plus 5 plain titles.
authored120.csv 30 authors x 4 papers, mostly disjoint; two guest
                co-authors per author block (below the eligibility
                threshold) and two cross-author links so some proposals
                get rejected.
fairness10.csv  10 single-author blocks with wildly uneven paper counts
                {3,3,4,5,8,13,21,34,50,50} for proposal-uniformity checks.
"""

import csv
import pathlib

HERE = pathlib.Path(__file__).parent
HEADER = ["title", "authors", "year", "venue", "doi", "url"]
VENUES = ["VIS", "TVCG", "EuroVis", "PacificVis", "CHI"]

COLON_TITLES = [
    "Aurora: Streaming Timelines for Event Logs",
    "Basalt: Layered Provenance Graphs",
    "Cinder: Fast Approximate Heatmaps",
    "Drift: Tracking Concept Change in Streams",
    "Ember: Embedding Projections at Scale",
    "Fjord: Fluid Queries over Nested Data",
    "Glacier: Incremental Rendering of Large Trees",
    "Harbor: Collaborative Annotation Boards",
    "Iris: Perception-Aware Color Ramps",
    "Juniper: Branch-and-Bound Layout Search",
    "Krill: Micro-Visualizations for Dense Tables",
    "Lumen: Illuminating Dark Data",
    "Mesa: Multi-Resolution Scalar Fields",
    "Nimbus: Cloud-Backed Notebook Dashboards",
    "Onyx: Contrast-Preserving Dark Themes",
    "Pumice: Lightweight Graph Sketching",
    "Quartz: Crystal-Clear Uncertainty Bands",
    "Vista: Mapping Distant Structure",
    "VISTA: Layered Temporal Views",  # case-folded prefix collides with the row above
    "Willow: Weeping Edge Bundles",
]

PLAIN_TITLES = [
    "A Survey of Streaming Layouts",
    "Rethinking Dense Table Design",
    "Perception of Animated Transitions",
    "Notes on Provenance Capture",
    "The Shape of Embedding Spaces",
]

COLON_AUTHORS = [
    "Maya Chen", "Leo Fontaine", "Priya Anand", "Tomás Rivera", "Ines Weber",
    "Akira Sato", "Nora Lindgren", "Samuel Okafor", "Elif Demir", "Jonas Vogel",
    "Ruth Alvarez", "Petra Novak",
]

FIRST = ["Ada", "Ben", "Cleo", "Dev", "Eda", "Finn", "Gail", "Hana", "Ivo", "Jun",
         "Kai", "Lena", "Mira", "Noor", "Omar", "Pia", "Quinn", "Rhea", "Sami", "Tess",
         "Uma", "Vik", "Wren", "Xena", "Yara", "Zane", "Alba", "Bram", "Cyra", "Dara"]
LAST = ["Alder", "Birch", "Cedar", "Dogwood", "Elm", "Fir", "Gingko", "Hazel",
        "Ironwood", "Juniper", "Katsura", "Laurel", "Maple", "Nutmeg", "Oak", "Pine",
        "Quince", "Rowan", "Spruce", "Teak", "Ulmus", "Viburnum", "Willow", "Xylo",
        "Yew", "Zelkova", "Aspen", "Beech", "Cypress", "Dogbane"]

TOPICS = ["Saliency", "Lenses", "Brushing", "Layouts", "Uncertainty", "Provenance",
          "Embeddings", "Streaming", "Annotation", "Color", "Interaction", "Narrative",
          "Graphs", "Trees", "Maps", "Volumes", "Ensembles", "Literacy",
          "Accessibility", "Immersion", "Sketching", "Dashboards", "Notebooks",
          "Perception", "Animation", "Aggregation", "Sampling", "Filtering",
          "Faceting", "Scalability"]
KINDS = ["Foundations", "Methods", "Systems", "Evaluation"]


def write(name, rows):
    with open(HERE / name, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(HEADER)
        w.writerows(rows)
    print(f"wrote {name}: {len(rows)} rows")


def colon20():
    rows = []
    for i, title in enumerate(COLON_TITLES + PLAIN_TITLES):
        authors = [COLON_AUTHORS[i % 12]]
        if i % 3 == 0:
            authors.append(COLON_AUTHORS[(i + 5) % 12])
        rows.append([
            title,
            "|".join(authors),
            str(2004 + i % 20),
            VENUES[i % 5],
            f"10.1234/c{i:02d}" if i % 2 == 0 else "",
            f"https://papers.example/c{i:02d}" if i % 2 == 1 else "",
        ])
    return rows


def authored120():
    rows = []
    for i in range(30):
        owner = f"{FIRST[i]} {LAST[i]}"
        for k in range(4):
            pid = 4 * i + k
            authors = [owner]
            if k < 2:
                authors.append(f"Gast {LAST[i]}")  # guest: 2 papers, never eligible
            # two cross-author links so target-author exclusion fires sometimes
            if pid == 44:
                authors.append(f"{FIRST[10]} {LAST[10]}")
            if pid == 116:
                authors.append(f"{FIRST[28]} {LAST[28]}")
            rows.append([
                f"{TOPICS[i]} {KINDS[k]} {i:02d}{k}",
                "|".join(authors),
                str(1995 + (pid * 7) % 29),
                VENUES[pid % 5],
                f"10.5555/p{pid:03d}" if pid % 3 != 2 else "",
                f"https://papers.example/p{pid:03d}" if pid % 2 == 0 else "",
            ])
    return rows


def fairness10():
    counts = [3, 3, 4, 5, 8, 13, 21, 34, 50, 50]
    rows = []
    for i, count in enumerate(counts):
        author = f"Fair {chr(65 + i)}"
        for j in range(count):
            rows.append([
                f"Workload {chr(65 + i)} Report {j:02d}",
                author,
                str(1990 + j % 31),
                VENUES[j % 5],
                "",
                "",
            ])
    return rows


if __name__ == "__main__":
    write("colon20.csv", colon20())
    write("authored120.csv", authored120())
    write("fairness10.csv", fairness10())
