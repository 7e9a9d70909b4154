#!/usr/bin/env python3
# Copyright 2026 The dimkit Authors.
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

"""Regenerates the fixture files under data/ and tests/data/.

  data/triplets.tsv     synthetic 200-triplet store
  data/corpus.txt       50 sentences, one per line
  data/corpus_gold.jsonl  hand labels for corpus.txt
  data/mwp.jsonl        small math word problem set
  tests/data/vectors.txt  tiny word-vector file
"""

import json
import os
import random
import re

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..")


def write(path, text):
    with open(os.path.join(ROOT, path), "w", encoding="utf-8") as f:
        f.write(text)


# --- triplet store ---------------------------------------------------------

PEOPLE = [
    "LeBron James", "Yao Ming", "Serena Williams", "Usain Bolt", "Li Na",
    "Roger Federer", "Sun Yang", "Lionel Messi", "Simone Biles", "Liu Xiang",
    "Michael Phelps", "Zhang Jike", "Naomi Osaka", "Kobe Bryant",
    "Lin Dan",
]
MOUNTAINS = ["Mount Tai", "Mount Hua", "Mount Emei", "Mount Huang",
             "Mont Blanc", "Mount Fuji", "Mount Kenya", "Ben Nevis",
             "Mount Olympus", "Mount Rainier"]
RIVERS = ["Yangtze", "Yellow River", "Nile", "Amazon", "Danube", "Rhine",
          "Mekong", "Volga", "Thames", "Seine"]
CITIES = ["Akron", "Shanghai", "Saginaw", "Kingston", "Wuhan", "Basel",
          "Hangzhou", "Rosario", "Columbus", "Tianjin", "Osaka",
          "Philadelphia", "Fuzhou", "Lyon", "Guangzhou", "Detroit",
          "Nanjing", "Madrid", "Boston", "Chengdu"]
SUBSTANCES = ["water", "ethanol", "acetone", "benzene", "methanol",
              "glycerol", "toluene", "hexane", "ammonia", "chloroform"]
FILMS = ["Red Sorghum", "Hero", "Farewell My Concubine", "To Live",
         "In the Mood for Love", "Raise the Red Lantern", "Yellow Earth",
         "The Road Home", "Still Life", "Suzhou River"]


def triplets():
    rows = []
    heights = ["2.06 meters", "2.29 m", "175 cm", "1.95 meters", "172 cm",
               "1.85 m", "198 cm", "1.70 m", "1.42 meters", "unknown"]
    for who, h in zip(PEOPLE, heights):
        rows.append((who, "height", h))
    weights = ["113 kg", "141 kilograms", "72 kg", "94 kg", "65 kilograms",
               "85 kg", "89 kg", "72 kilograms", "47 kg", "87 kg"]
    for who, w in zip(PEOPLE[:10], weights):
        rows.append((who, "weight", w))
    # 8 of 10 are quantities, exactly the 0.8 threshold.
    areas = ["426 km²", "148 km^2", "154 km²", "1200 km²",
             "75 平方千米", "90 km²", "less than Tai",
             "62 km²", "not surveyed", "248 km²"]
    for m, a in zip(MOUNTAINS, areas):
        rows.append((m, "area", a))
    for who, c in zip(PEOPLE, CITIES):
        rows.append((who, "birth_place", c))
    pops = ["1,200,000", "24,870,000", "190,000", "1,100,000", "11,080,000",
            "178,000", "10,940,000", "1,300,000", "905,000", "13,860,000",
            "2,750,000", "1,576,000", "8,500,000", "639,000", "9,423,000"]
    for c, p in zip(CITIES, pops):
        rows.append((c, "population", p))
    lengths = ["6300 km", "5464 kilometers", "6650 km", "6400 km", "2850 km",
               "1230 km", "4350 kilometers", "3530 km", "346 km", "777 km"]
    for r, l in zip(RIVERS, lengths):
        rows.append((r, "length", l))
    # 7 of 10: below the threshold.
    elevations = ["1545 m", "2154.9 meters", "3099 m", "1864.8 m", "4808 m",
                  "3776 m", "5199 m", "highest in the region", "see atlas",
                  "not measured"]
    for m, e in zip(MOUNTAINS, elevations):
        rows.append((m, "elevation", e))
    boiling = ["100 degrees Celsius", "78.37 °C", "56 degrees Celsius",
               "80.1 °C", "149 °F", "290 degrees Celsius", "231 °F",
               "68.7 degrees Celsius", "-33.34 °C", "61.2 degrees Celsius"]
    for s, b in zip(SUBSTANCES, boiling):
        rows.append((s, "boiling_point", b))
    # Only reachable once the boiling points have contributed °F.
    melting = ["32 °F", "-173 °F", "-139 °F", "42 °F", "-144 °F", "64 °F",
               "-139 °F", "-140 °F", "-108 °F", "-82 °F"]
    for s, m in zip(SUBSTANCES, melting):
        rows.append((s, "melting_point", m))
    runtimes = ["91 minutes", "99 minutes", "171 minutes", "2 hours",
                "98 minutes", "125 minutes", "89 minutes", "89 min",
                "111 minutes", "83 minutes"]
    for f, r in zip(FILMS, runtimes):
        rows.append((f, "runtime", r))
    years = ["1987", "2002", "1993", "1994", "2000", "1991", "1984", "1999",
             "2006", "2000"]
    for f, y in zip(FILMS, years):
        rows.append((f, "release_year", y))
    directors = ["Zhang Yimou", "Zhang Yimou", "Chen Kaige", "Zhang Yimou",
                 "Wong Kar-wai", "Zhang Yimou", "Chen Kaige", "Zhang Yimou",
                 "Jia Zhangke", "Lou Ye"]
    for f, d in zip(FILMS, directors):
        rows.append((f, "director", d))
    occupations = ["basketball player", "basketball player", "tennis player",
                   "sprinter", "tennis player", "tennis player", "swimmer",
                   "footballer", "gymnast", "hurdler", "swimmer",
                   "table tennis player", "tennis player",
                   "basketball player", "badminton player"]
    for who, o in zip(PEOPLE, occupations):
        rows.append((who, "occupation", o))
    nicknames = ["King James", "the Moving Great Wall", "the Hour of Power",
                 "Lightning Bolt", "Big Sister Na", "FedEx", "the Fish",
                 "the Flea", "the Mailman", "the Flying Man"]
    for who, n in zip(PEOPLE, nicknames):
        rows.append((who, "nickname", n))
    voltages = ["220 V", "110 V", "380 V", "12 V", "24 V", "5 V", "48 V",
                "230 V", "120 V", "3.3 V"]
    for i, v in enumerate(voltages):
        rows.append(("Appliance %d" % (i + 1), "rated_voltage", v))
    powers = ["150 kW", "90 kW", "2 kW", "750 W", "1200 W", "60 W", "45 kW",
              "300 W", "11 kW", "7 kW"]
    for i, p in enumerate(powers):
        rows.append(("Appliance %d" % (i + 1), "rated_power", p))
    depths = ["10,994 m", "8376 meters", "7450 m", "8047 m", "7192 meters",
              "5267 m", "6000 m", "unknown", "4500 meters", "3500 m"]
    for i, d in enumerate(depths):
        rows.append(("Trench %d" % (i + 1), "depth", d))
    teams = ["Los Angeles Lakers", "Houston Rockets", "none", "Racers Track Club",
             "none", "none", "Zhejiang", "Inter Miami", "none", "Shanghai",
             "none", "Shanghai", "none", "Los Angeles Lakers", "none"]
    for who, t in zip(PEOPLE, teams):
        rows.append((who, "team", t))
    return rows


def write_triplets():
    rows = triplets()
    assert len(rows) == 200, len(rows)
    out = ["# subject\tpredicate\tobject"]
    out += ["\t".join(r) for r in rows]
    write("data/triplets.tsv", "\n".join(out) + "\n")


# --- annotated corpus ------------------------------------------------------

# <<quantity=UNIT_ID>> marks a gold quantity. Subsets: "unambiguous" (plain
# quantities), "ambiguous" (surface shared by several units), "planted_fp"
# (code-like tokens that look like quantities) and "none".
CORPUS = [
    ("unambiguous", "LeBron James is <<2.06 meters=M>> tall."),
    ("unambiguous", "The package weighs <<3.5 kg=KiloGM>>."),
    ("unambiguous", "小王要将<<150千克=KiloGM>>含药量20%的农药稀释成含药量5%的药水。"),
    ("unambiguous", "The marathon course is <<42.195 km=KiloM>> long."),
    ("unambiguous", "She ran for <<45 minutes=MIN>> before breakfast."),
    ("unambiguous", "The tank holds <<60 liters=L>> of fuel."),
    ("unambiguous", "A newborn elephant can weigh <<120 kilograms=KiloGM>>."),
    ("unambiguous", "这条河全长<<6300千米=KiloM>>。"),
    ("unambiguous", "The motor delivers <<150 kW=KiloW>> at full load."),
    ("unambiguous", "The wall is <<25 cm=CentiM>> thick and <<3 m=M>> high."),
    ("unambiguous", "Each tablet contains <<500 mg=MilliGM>> of the drug."),
    ("unambiguous", "The road trip covered a travel distance of <<1.2 miles=MI>>."),
    ("unambiguous", "The flight took <<13 hours=HR>>."),
    ("unambiguous", "Set the oven to <<200 °C=DEG_C>> and bake."),
    ("unambiguous", "The battery is rated at <<5000 mAh=MilliA-HR>>."),
    ("unambiguous", "The force on the beam was <<12 kN=KiloN>>."),
    ("unambiguous", "The farm covers <<40 hectares=HA>>."),
    ("unambiguous", "The car reached <<120 km/h=KiloM-PER-HR>> on the highway."),
    ("unambiguous", "Tire pressure should be <<220 kPa=KiloPA>>."),
    ("unambiguous", "他每天喝<<2升=L>>水。"),
    ("unambiguous", "The signal runs at <<2400 MHz=MegaHZ>> nominally."),
    ("unambiguous", "A cup of rice has about <<200 kcal=KiloCAL>>."),
    ("unambiguous", "The rope is <<30 feet=FT>> long."),
    ("unambiguous", "The surface tension of the liquid interface is <<72 dyn/cm=DYN-PER-CentiM>>."),
    ("unambiguous", "The wire carries <<3 amperes=A>>."),
    ("unambiguous", "The room is <<18 m²=M2>>."),
    ("unambiguous", "The pool holds <<2500 cubic meters=M3>> of water."),
    ("unambiguous", "The battery circuit runs at <<12 volts=V>>."),
    ("unambiguous", "The sample was kept for <<3 days=DAY>> at room temperature."),
    ("unambiguous", "The baby weighed <<7 pounds=LB>> at birth."),
    ("ambiguous", "His glasses are <<300 degree=DIOPTER>> for myopia."),
    ("ambiguous", "The water boiled at <<100 degrees=DEG_C>> in the kettle."),
    ("ambiguous", "The field is <<5 t=TESLA>> in the magnet bore."),
    ("ambiguous", "这副眼镜是<<300度=DIOPTER>>的近视镜片，适合myopia prescription。"),
    ("ambiguous", "The truck carries <<5 t=TONNE>> of sand."),
    ("planted_fp", "The LPUI-1T module failed the bench test."),
    ("planted_fp", "Install the RT-5G router near the window."),
    ("planted_fp", "Part SKU-3M ships with <<2 kg=KiloGM>> of packing foam."),
    ("planted_fp", "Firmware for the GX-4L board was released."),
    ("planted_fp", "The KT-8h kit costs less than the older model."),
    ("none", "The committee met on Tuesday."),
    ("none", "Nothing about this report involves measurement."),
    ("none", "Please bring your own notebook."),
    ("none", "The results will be announced later."),
    ("none", "他们明天去公园散步。"),
    ("none", "The chapter describes the history of the town."),
    ("none", "We have no further comments."),
    ("none", "The museum opens after the holiday."),
    ("none", "Her story was widely shared online."),
    ("none", "The meeting was moved to the afternoon."),
]

VALUE_RE = re.compile(r"[-+]?\d[\d,]*(?:\.\d+)?")


def write_corpus():
    assert len(CORPUS) == 50, len(CORPUS)
    lines, gold = [], []
    for line_no, (subset, marked) in enumerate(CORPUS, start=1):
        text = ""
        quantities = []
        pos = 0
        for m in re.finditer(r"<<(.+?)=([^>]+)>>", marked):
            text += marked[pos:m.start()]
            inner, unit_id = m.group(1), m.group(2)
            v = VALUE_RE.match(inner)
            value_text = v.group(0)
            rest = inner[v.end():]
            unit_text = rest.lstrip(" ")
            begin = len(text.encode("utf-8"))
            value_end = begin + len(value_text.encode("utf-8"))
            unit_begin = value_end + len((rest[:len(rest) - len(unit_text)]).encode("utf-8"))
            unit_end = unit_begin + len(unit_text.encode("utf-8"))
            quantities.append({
                "value_span": [begin, value_end],
                "unit_span": [unit_begin, unit_end],
                "unit_surface": unit_text,
                "unit_id": unit_id,
            })
            text += inner
            pos = m.end()
        text += marked[pos:]
        lines.append(text)
        gold.append({"line_no": line_no, "subset": subset, "text": text,
                     "quantities": quantities})
    write("data/corpus.txt", "\n".join(lines) + "\n")
    write("data/corpus_gold.jsonl",
          "".join(json.dumps(g, ensure_ascii=False) + "\n" for g in gold))


# --- math word problems ----------------------------------------------------

MWP = [
    ("pesticide", "小王要将150千克含药量20%的农药稀释成含药量5%的药水。",
     "需要加水多少千克？", "150*20%/5%-150", 450, "KiloGM"),
    ("rope", "一根绳子长12米，剪去3米。", "还剩多少米？", "12-3", 9, "M"),
    ("rice", "一袋大米重25千克，吃了8千克。", "还剩多少千克？", "25-8", 17, "KiloGM"),
    ("road", "一条路长5千米，已经修了2千米。", "还要修多少千米？", "5-2", 3, "KiloM"),
    ("juice", "妈妈买了3升果汁，喝了1升。", "还剩多少升？", "3-1", 2, "L"),
    ("walk", "小明每分钟走60米，走了15分钟。", "一共走了多少米？", "60*15", 900, "M"),
    ("apples", "每箱苹果重12千克，共有8箱。", "一共重多少千克？", "12*8", 96, "KiloGM"),
    ("train", "火车每小时行驶120千米，行驶了3小时。", "一共行驶了多少千米？",
     "120*3", 360, "KiloM"),
    ("water", "水池里有400升水，每小时放出50升。", "几小时能放完？",
     "400/50", 8, None),
    ("fabric", "一块布长18米，做一件衣服用2米。", "能做多少件衣服？", "18/2", 9, None),
    ("flour", "面包店有50千克面粉，每天用6千克，用了5天。", "还剩多少千克？",
     "50-6*5", 20, "KiloGM"),
    ("track", "操场跑道一圈400米，小红跑了5圈。", "小红跑了多少米？", "400*5", 2000, "M"),
    ("milk", "一瓶牛奶250毫升，小华喝了4瓶。", "小华一共喝了多少毫升？",
     "250*4", 1000, "MilliL"),
    ("sugar", "做一个蛋糕要用200克糖，做6个蛋糕。", "一共要用多少克糖？",
     "200*6", 1200, "GM"),
    ("bike", "小李骑车每小时15千米，骑了2小时。", "小李骑了多少千米？", "15*2", 30, "KiloM"),
    ("field", "一块地长80米，宽50米。", "这块地的面积是多少平方米？",
     "80*50", 4000, "M2"),
    ("tank", "油箱里有45升油，每100千米耗油9升。", "能行驶多少千米？",
     "45/9*100", 500, "KiloM"),
    ("cement", "工地有12吨水泥，用去了三分之一。", "还剩多少吨？",
     "12-12/3", 8, "TONNE"),
    ("pipe", "一根水管长6米，截成每段1.5米。", "可以截成几段？", "6/1.5", 4, None),
    ("salt", "盐水共500克，其中含盐10%。", "含盐多少克？", "500*10%", 50, "GM"),
    ("en_wire", "A wire is 15 m long and 4 m are cut off.",
     "How many meters of wire are left?", "15-4", 11, "M"),
    ("en_bag", "A bag of flour weighs 2.5 kg and a baker uses 4 bags.",
     "How many kilograms of flour does the baker use?", "2.5*4", 10, "KiloGM"),
    ("en_run", "Tom runs 3 km every day for 7 days.",
     "How many kilometers does Tom run in total?", "3*7", 21, "KiloM"),
    ("en_paint", "A can holds 4 liters of paint and a room needs 3 cans.",
     "How many liters of paint are needed?", "4*3", 12, "L"),
    ("en_trip", "A car travels at 80 km/h for 2 hours.",
     "How many kilometers does the car travel?", "80*2", 160, "KiloM"),
    ("en_box", "A box weighs 500 g and holds 6 cans of 250 g each.",
     "How many grams do the box and cans weigh?", "500+6*250", 2000, "GM"),
    ("en_fence", "A garden is 12 m long and 8 m wide.",
     "How many meters of fence go around it?", "(12+8)*2", 40, "M"),
    ("en_rain", "It rained 25 mm on Monday and 17 mm on Tuesday.",
     "How many millimeters of rain fell?", "25+17", 42, "MilliM"),
    ("en_count", "There are 24 students and each gets 3 pencils.",
     "How many pencils are needed?", "24*3", 72, None),
    ("en_ratio", "A recipe uses 300 g of flour for 12 cookies.",
     "How many grams are needed for 4 cookies?", "300/12*4", 100, "GM"),
]


def write_mwp():
    out = []
    for pid, body, question, eq, answer, unit in MWP:
        row = {"id": pid, "body": body, "question": question, "equation": eq,
               "answer": answer}
        if unit:
            row["answer_unit"] = unit
        out.append(json.dumps(row, ensure_ascii=False))
    write("data/mwp.jsonl", "\n".join(out) + "\n")


# --- word vectors ----------------------------------------------------------

def write_vectors():
    rng = random.Random(7)
    words = {
        # Two loose topics so the context term separates them.
        "optical": ["eyeglass", "eyeglasses", "glasses", "lens", "myopia",
                    "prescription", "vision", "optical"],
        "thermal": ["water", "boiled", "boil", "temperature", "hot", "cold",
                    "weather", "oven", "heat", "freezing"],
    }
    base = {"optical": [1.0, 0.0, 0.0, 0.0], "thermal": [0.0, 1.0, 0.0, 0.0]}
    lines = []
    for topic, ws in words.items():
        for w in ws:
            v = [b + rng.uniform(-0.1, 0.1) for b in base[topic]]
            lines.append(w + " " + " ".join("%.4f" % x for x in v))
    write("tests/data/vectors.txt",
          "%d 4\n" % len(lines) + "\n".join(lines) + "\n")


if __name__ == "__main__":
    write_triplets()
    write_corpus()
    write_mwp()
    write_vectors()
