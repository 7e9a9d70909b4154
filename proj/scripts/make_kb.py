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

"""Regenerates data/units.tsv and data/unit_frequency.tsv.

Each unit carries a rough commonness in [0, 1]. The sidecar turns it into
three raw signals and the Frequency column is the normalized score of those
signals, so loading the KB with or without the sidecar gives the same
frequencies.
"""

import math
import os

DIM = {
    "L": "A0E0L1I0M0H0T0D0",
    "M": "A0E0L0I0M1H0T0D0",
    "T": "A0E0L0I0M0H0T1D0",
    "E": "A0E1L0I0M0H0T0D0",
    "H": "A0E0L0I0M0H1T0D0",
    "A": "A1E0L0I0M0H0T0D0",
    "I": "A0E0L0I1M0H0T0D0",
    "L2": "A0E0L2I0M0H0T0D0",
    "L3": "A0E0L3I0M0H0T0D0",
    "LT-1": "A0E0L1I0M0H0T-1D0",
    "L3T-1": "A0E0L3I0M0H0T-1D0",
    "LMT-2": "A0E0L1I0M1H0T-2D0",
    "MT-2": "A0E0L0I0M1H0T-2D0",
    "L2MT-2": "A0E0L2I0M1H0T-2D0",
    "L2MT-3": "A0E0L2I0M1H0T-3D0",
    "L-1MT-2": "A0E0L-1I0M1H0T-2D0",
    "L3MT-2": "A0E0L3I0M1H0T-2D0",
    "L-1": "A0E0L-1I0M0H0T0D0",
    "D": "A0E0L0I0M0H0T0D1",
    "T-1": "A0E0L0I0M0H0T-1D0",
    "ET": "A0E1L0I0M0H0T1D0",
    "L2ME-1T-3": "A0E-1L2I0M1H0T-3D0",
    "ME-1T-2": "A0E-1L0I0M1H0T-2D0",
    "L-3M": "A0E0L-3I0M1H0T0D0",
}

# (id, zh, en, symbols, aliases, description, keywords, commonness, kind,
#  dim, conversion, affine offset)
UNITS = [
    # Length
    ("M", "米", "meter", "m", "metre|meters|metres", "SI base unit of length",
     "length|distance|height|tall|long|wide", 1.00, "Length", "L", "1", ""),
    ("CentiM", "厘米", "centimeter", "cm", "centimetre|centimeters|centimetres",
     "one hundredth of a meter", "length|height|ruler|small|tall", 0.85,
     "Length", "L", "0.01", ""),
    ("MilliM", "毫米", "millimeter", "mm", "millimetre|millimeters|millimetres",
     "one thousandth of a meter", "length|thickness|rainfall|precision", 0.70,
     "Length", "L", "0.001", ""),
    ("KiloM", "千米", "kilometer", "km", "kilometre|kilometers|kilometres|公里",
     "one thousand meters", "distance|road|travel|far|route", 0.90, "Length",
     "L", "1000", ""),
    ("DeciM", "分米", "decimeter", "dm", "decimetre|decimeters",
     "one tenth of a meter", "length|classroom", 0.25, "Length", "L", "0.1",
     ""),
    ("IN", "英寸", "inch", "", "inches", "imperial unit of length",
     "screen|length|display|diagonal", 0.60, "Length", "L", "0.0254", ""),
    ("FT", "英尺", "foot", "ft", "feet", "imperial unit of length",
     "height|altitude|length", 0.55, "Length", "L", "0.3048", ""),
    ("MI", "英里", "mile", "mi", "miles", "imperial unit of distance",
     "distance|road|travel", 0.50, "Length", "L", "1609.344", ""),
    # Mass
    ("KiloGM", "千克", "kilogram", "kg", "kilograms|kilogramme|公斤",
     "SI base unit of mass", "mass|weight|heavy|weigh", 0.95, "Mass", "M", "1",
     ""),
    ("GM", "克", "gram", "g", "grams|gramme", "one thousandth of a kilogram",
     "mass|weight|food|light", 0.88, "Mass", "M", "0.001", ""),
    ("MilliGM", "毫克", "milligram", "mg", "milligrams",
     "one millionth of a kilogram", "dose|medicine|mass|tablet", 0.45, "Mass",
     "M", "0.000001", ""),
    ("TONNE", "吨", "tonne", "t", "ton|tons|tonnes|metric ton",
     "one thousand kilograms", "mass|cargo|freight|heavy|truck", 0.70, "Mass",
     "M", "1000", ""),
    ("LB", "磅", "pound", "lb", "pounds|lbs", "avoirdupois pound",
     "weight|mass|body", 0.50, "Mass", "M", "0.45359237", ""),
    ("OZ", "盎司", "ounce", "oz", "ounces", "avoirdupois ounce",
     "weight|gold|mass", 0.35, "Mass", "M", "0.028349523125", ""),
    # Time
    ("SEC", "秒", "second", "s", "seconds|sec|secs", "SI base unit of time",
     "time|duration|fast|timer", 0.92, "Time", "T", "1", ""),
    ("MIN", "分钟", "minute", "min", "minutes|mins", "sixty seconds",
     "time|duration|wait", 0.90, "Time", "T", "60", ""),
    ("HR", "小时", "hour", "h", "hours|hr|hrs", "sixty minutes",
     "time|duration|work|drive", 0.90, "Time", "T", "3600", ""),
    ("DAY", "天", "day", "d", "days", "twenty-four hours",
     "time|calendar|duration", 0.85, "Time", "T", "86400", ""),
    ("MilliSEC", "毫秒", "millisecond", "ms", "milliseconds",
     "one thousandth of a second", "latency|timing|delay|response", 0.45,
     "Time", "T", "0.001", ""),
    # Electric current
    ("A", "安培", "ampere", "A", "amperes|amps|amp",
     "SI base unit of electric current", "current|electric|circuit|wire",
     0.60, "ElectricCurrent", "E", "1", ""),
    ("MilliA", "毫安", "milliampere", "mA", "milliamperes|milliamps",
     "one thousandth of an ampere", "current|battery|circuit", 0.40,
     "ElectricCurrent", "E", "0.001", ""),
    # Temperature
    ("K", "开尔文", "kelvin", "K", "kelvins",
     "SI base unit of thermodynamic temperature",
     "temperature|absolute|thermodynamic|physics", 0.40, "Temperature", "H",
     "1", ""),
    ("DEG_C", "摄氏度", "degree Celsius", "°C|℃",
     "degree|degrees|degrees Celsius|centigrade|度",
     "temperature on the Celsius scale",
     "temperature|water|boiling|boiled|weather|heat|thermometer|cold|warm",
     0.85, "Temperature", "H", "1", "273.15"),
    ("DEG_F", "华氏度", "degree Fahrenheit", "°F",
     "degrees Fahrenheit|fahrenheit", "temperature on the Fahrenheit scale",
     "temperature|weather|heat|cold", 0.40, "Temperature", "H",
     "0.5555555555555556", "255.3722222222222"),
    # Amount of substance
    ("MOL", "摩尔", "mole", "mol", "moles",
     "SI base unit of amount of substance",
     "chemistry|substance|molecules|reaction", 0.55, "AmountOfSubstance", "A",
     "1", ""),
    ("MilliMOL", "毫摩尔", "millimole", "mmol", "millimoles",
     "one thousandth of a mole", "chemistry|concentration|blood", 0.30,
     "AmountOfSubstance", "A", "0.001", ""),
    ("KiloMOL", "千摩尔", "kilomole", "kmol", "kilomoles",
     "one thousand moles", "chemistry|industrial|gas", 0.15,
     "AmountOfSubstance", "A", "1000", ""),
    # Luminous intensity
    ("CD", "坎德拉", "candela", "cd", "candelas",
     "SI base unit of luminous intensity", "light|luminous|lamp|brightness",
     0.25, "LuminousIntensity", "I", "1", ""),
    # Area
    ("M2", "平方米", "square meter", "m²|m^2", "square meters|square metres|sqm",
     "area of a one-meter square", "area|floor|apartment|room|land", 0.85,
     "Area", "L2", "1", ""),
    ("CentiM2", "平方厘米", "square centimeter", "cm²|cm^2",
     "square centimeters|square centimetres", "area of a one-centimeter square",
     "area|surface|small", 0.50, "Area", "L2", "0.0001", ""),
    ("KiloM2", "平方千米", "square kilometer", "km²|km^2",
     "square kilometers|square kilometres|平方公里",
     "area of a one-kilometer square", "area|country|city|region|land", 0.65,
     "Area", "L2", "1000000", ""),
    ("HA", "公顷", "hectare", "ha", "hectares", "ten thousand square meters",
     "area|farm|field|land|crop", 0.50, "Area", "L2", "10000", ""),
    ("AC", "英亩", "acre", "ac", "acres", "imperial unit of area",
     "area|farm|land|estate", 0.35, "Area", "L2", "4046.8564224", ""),
    # Volume
    ("M3", "立方米", "cubic meter", "m³|m^3", "cubic meters|cubic metres",
     "volume of a one-meter cube", "volume|water|gas|concrete|container", 0.65,
     "Volume", "L3", "1", ""),
    ("L", "升", "liter", "L", "litre|liters|litres|公升",
     "one thousandth of a cubic meter", "volume|water|bottle|fuel|drink", 0.85,
     "Volume", "L3", "0.001", ""),
    ("MilliL", "毫升", "milliliter", "mL", "millilitre|milliliters|millilitres",
     "one millionth of a cubic meter", "volume|medicine|bottle|liquid", 0.70,
     "Volume", "L3", "0.000001", ""),
    ("DeciM3", "立方分米", "cubic decimeter", "dm³|dm^3", "cubic decimeters",
     "volume of a one-decimeter cube", "volume|box|container", 0.20, "Volume",
     "L3", "0.001", ""),
    ("GAL_US", "加仑", "gallon", "gal", "gallons", "US liquid gallon",
     "volume|fuel|gasoline|milk", 0.45, "Volume", "L3", "0.003785411784", ""),
    ("GILL_US", "及耳", "gill", "gi", "gills", "US liquid gill",
     "volume|liquor|drink", 0.10, "Volume", "L3", "0.00011829411825", ""),
    # Speed
    ("M-PER-SEC", "米每秒", "meter per second", "m/s",
     "meters per second|metres per second", "SI unit of speed",
     "speed|velocity|wind|physics|motion", 0.70, "Speed", "LT-1", "1", ""),
    ("KiloM-PER-HR", "千米每小时", "kilometer per hour", "km/h",
     "kilometers per hour|kph|公里每小时", "road speed",
     "speed|car|road|drive|limit", 0.75, "Speed", "LT-1", "0.2777777777777778",
     ""),
    ("MI-PER-HR", "英里每小时", "mile per hour", "mph", "miles per hour",
     "imperial road speed", "speed|car|road|drive", 0.45, "Speed", "LT-1",
     "0.44704", ""),
    ("CentiM-PER-SEC", "厘米每秒", "centimeter per second", "cm/s",
     "centimeters per second", "slow speed", "speed|flow|slow|creep", 0.20,
     "Speed", "LT-1", "0.01", ""),
    # Volume flow rate
    ("M3-PER-SEC", "立方米每秒", "cubic meter per second", "m³/s|m^3/s",
     "cubic meters per second", "SI unit of volume flow rate",
     "flow|river|discharge|pump", 0.30, "VolumeFlowRate", "L3T-1", "1", ""),
    ("L-PER-SEC", "升每秒", "liter per second", "L/s", "liters per second",
     "volume flow rate", "flow|pump|water|pipe", 0.30, "VolumeFlowRate",
     "L3T-1", "0.001", ""),
    ("L-PER-HR", "升每小时", "liter per hour", "L/h", "liters per hour",
     "volume flow rate", "flow|fuel|consumption|drip", 0.25, "VolumeFlowRate",
     "L3T-1", "0.0000002777777777777778", ""),
    ("GILL_US-PER-HR", "及耳每小时", "gill per hour", "gill/h|gi/h",
     "gills per hour", "US gill per hour", "flow|drink|liquor|slow", 0.12,
     "VolumeFlowRate", "L3T-1", "0.00000003285947729166667", ""),
    # Force
    ("N", "牛顿", "newton", "N", "newtons", "SI unit of force",
     "force|push|pull|physics|gravity", 0.70, "Force", "LMT-2", "1", ""),
    ("KiloN", "千牛", "kilonewton", "kN", "kilonewtons",
     "one thousand newtons", "force|load|engineering|structure", 0.35, "Force",
     "LMT-2", "1000", ""),
    ("DYN", "达因", "dyne", "dyn", "dynes", "CGS unit of force",
     "force|cgs|physics", 0.30, "Force", "LMT-2", "0.00001", ""),
    ("POUNDAL", "磅达", "poundal", "pdl", "poundals",
     "foot-pound-second unit of force", "force|imperial|physics", 0.15,
     "Force", "LMT-2", "0.138254954376", ""),
    ("LBF", "磅力", "pound-force", "lbf", "pounds-force|pound force",
     "gravitational foot-pound-second unit of force", "force|thrust|imperial",
     0.30, "Force", "LMT-2", "4.4482216152605", ""),
    # Force per length
    ("N-PER-M", "牛每米", "newton per meter", "N/m",
     "newtons per meter|newton per metre", "SI unit of force per length",
     "stiffness|spring|tension|surface", 0.35, "ForcePerLength", "MT-2", "1",
     ""),
    ("DYN-PER-CentiM", "达因每厘米", "dyne per centimeter", "dyn/cm",
     "dyne per centimetre|dynes per centimeter",
     "CGS unit of force per length, used for surface tension",
     "surface|tension|liquid|film|capillary|physics", 0.29, "ForcePerLength",
     "MT-2", "0.001", ""),
    ("MilliN-PER-M", "毫牛每米", "millinewton per meter", "mN/m",
     "millinewtons per meter", "surface tension unit",
     "surface|tension|liquid|interface", 0.20, "ForcePerLength", "MT-2",
     "0.001", ""),
    # Energy
    ("J", "焦耳", "joule", "J", "joules", "SI unit of energy",
     "energy|work|heat|physics", 0.75, "Energy", "L2MT-2", "1", ""),
    ("KiloJ", "千焦", "kilojoule", "kJ", "kilojoules", "one thousand joules",
     "energy|food|nutrition|heat", 0.50, "Energy", "L2MT-2", "1000", ""),
    ("CAL", "卡路里", "calorie", "cal", "calories", "thermochemical calorie",
     "energy|food|diet|heat", 0.60, "Energy", "L2MT-2", "4.184", ""),
    ("KiloCAL", "千卡", "kilocalorie", "kcal", "kilocalories|大卡",
     "one thousand calories", "energy|food|diet|nutrition", 0.65, "Energy",
     "L2MT-2", "4184", ""),
    ("KiloW-HR", "千瓦时", "kilowatt hour", "kWh", "kilowatt hours|度电",
     "energy of one kilowatt for one hour", "electricity|bill|energy|power",
     0.70, "Energy", "L2MT-2", "3600000", ""),
    ("ERG", "尔格", "erg", "erg", "ergs", "CGS unit of energy",
     "energy|cgs|physics", 0.12, "Energy", "L2MT-2", "0.0000001", ""),
    # Torque shares the energy dimension.
    ("N-M", "牛米", "newton meter", "N·m|N m", "newton meters|newton metres",
     "SI unit of torque", "torque|bolt|engine|wrench|rotation", 0.40, "Torque",
     "L2MT-2", "1", ""),
    # Power
    ("W", "瓦特", "watt", "W", "watts", "SI unit of power",
     "power|electric|lamp|bulb", 0.75, "Power", "L2MT-3", "1", ""),
    ("KiloW", "千瓦", "kilowatt", "kW", "kilowatts", "one thousand watts",
     "power|engine|motor|electric", 0.60, "Power", "L2MT-3", "1000", ""),
    ("HP", "马力", "horsepower", "hp", "horsepowers", "mechanical horsepower",
     "power|engine|car|motor", 0.45, "Power", "L2MT-3", "745.6998715822702",
     ""),
    # Pressure
    ("PA", "帕斯卡", "pascal", "Pa", "pascals", "SI unit of pressure",
     "pressure|stress|physics", 0.55, "Pressure", "L-1MT-2", "1", ""),
    ("KiloPA", "千帕", "kilopascal", "kPa", "kilopascals", "one thousand pascals",
     "pressure|tire|weather", 0.45, "Pressure", "L-1MT-2", "1000", ""),
    ("BAR", "巴", "bar", "bar", "bars", "one hundred thousand pascals",
     "pressure|tire|diving|weather", 0.40, "Pressure", "L-1MT-2", "100000",
     ""),
    ("ATM", "标准大气压", "standard atmosphere", "atm", "atmosphere|atmospheres",
     "sea-level air pressure", "pressure|air|altitude|gas", 0.40, "Pressure",
     "L-1MT-2", "101325", ""),
    # Energy times length
    ("J-M", "焦耳米", "joule meter", "J·m|J m", "joule meters|joule metres",
     "energy times length", "energy|length|product", 0.10, "EnergyLength",
     "L3MT-2", "1", ""),
    # Optical power and inverse length
    ("DIOPTER", "屈光度", "diopter", "dpt", "dioptre|diopters|degree|度",
     "refractive power of a lens",
     "eyeglass|eyeglasses|lens|glasses|prescription|myopia|vision|optical",
     0.30, "OpticalPower", "L-1", "1", ""),
    ("PER-M", "每米", "reciprocal meter", "m⁻¹|1/m", "per meter|inverse meter",
     "SI unit of wavenumber", "wavenumber|spectroscopy|wave", 0.12,
     "InverseLength", "L-1", "1", ""),
    # Dimensionless
    ("NUM", "个", "count", "", "pieces|items", "counting unit",
     "count|number|items|pieces", 0.60, "Dimensionless", "D", "1", ""),
    ("PERCENT", "百分比", "percent", "%", "per cent|percentage",
     "one hundredth", "ratio|fraction|rate|share", 0.80, "Dimensionless", "D",
     "0.01", ""),
    ("PERMILLE", "千分比", "per mille", "‰", "permille|per mil",
     "one thousandth", "ratio|fraction|rate", 0.15, "Dimensionless", "D",
     "0.001", ""),
    ("DOZEN", "打", "dozen", "doz", "dozens", "twelve items",
     "count|eggs|items", 0.35, "Dimensionless", "D", "12", ""),
    ("RAD", "弧度", "radian", "rad", "radians", "SI unit of plane angle",
     "angle|rotation|geometry|trigonometry", 0.40, "PlaneAngle", "D", "1", ""),
    ("DEG", "角度", "degree of arc", "°", "arc degree|arcdegree",
     "one 360th of a full turn", "angle|geometry|rotation|turn", 0.55,
     "PlaneAngle", "D", "0.017453292519943295", ""),
    # Frequency
    ("HZ", "赫兹", "hertz", "Hz", "hertzes", "SI unit of frequency",
     "frequency|signal|sound|wave", 0.55, "Frequency", "T-1", "1", ""),
    ("KiloHZ", "千赫", "kilohertz", "kHz", "kilohertzes", "one thousand hertz",
     "frequency|radio|signal", 0.35, "Frequency", "T-1", "1000", ""),
    ("MegaHZ", "兆赫", "megahertz", "MHz", "megahertzes", "one million hertz",
     "frequency|radio|processor|clock", 0.45, "Frequency", "T-1", "1000000",
     ""),
    # Electric charge
    ("C", "库仑", "coulomb", "C", "coulombs", "SI unit of electric charge",
     "charge|electric|physics|capacitor", 0.40, "ElectricCharge", "ET", "1",
     ""),
    ("MilliA-HR", "毫安时", "milliampere hour", "mAh",
     "milliampere hours|milliamp hours", "battery capacity",
     "battery|capacity|phone|charge", 0.55, "ElectricCharge", "ET", "3.6", ""),
    # Voltage
    ("V", "伏特", "volt", "V", "volts", "SI unit of electric potential",
     "voltage|battery|electric|circuit", 0.65, "Voltage", "L2ME-1T-3", "1",
     ""),
    ("KiloV", "千伏", "kilovolt", "kV", "kilovolts", "one thousand volts",
     "voltage|grid|transmission", 0.35, "Voltage", "L2ME-1T-3", "1000", ""),
    ("MilliV", "毫伏", "millivolt", "mV", "millivolts",
     "one thousandth of a volt", "voltage|signal|sensor", 0.30, "Voltage",
     "L2ME-1T-3", "0.001", ""),
    # Magnetic flux density
    ("TESLA", "特斯拉", "tesla", "T", "teslas", "SI unit of magnetic flux density",
     "magnetic|field|magnet|mri|flux", 0.35, "MagneticFluxDensity", "ME-1T-2",
     "1", ""),
    ("GAUSS", "高斯", "gauss", "Gs", "gausses", "CGS unit of magnetic flux density",
     "magnetic|field|magnet|cgs", 0.25, "MagneticFluxDensity", "ME-1T-2",
     "0.0001", ""),
    # Density
    ("KiloGM-PER-M3", "千克每立方米", "kilogram per cubic meter", "kg/m³|kg/m^3",
     "kilograms per cubic meter", "SI unit of density",
     "density|material|fluid", 0.40, "Density", "L-3M", "1", ""),
    ("GM-PER-CentiM3", "克每立方厘米", "gram per cubic centimeter", "g/cm³|g/cm^3",
     "grams per cubic centimeter", "CGS unit of density",
     "density|material|metal|solid", 0.40, "Density", "L-3M", "1000", ""),
]


def raw_signals(commonness):
    gt = 10.0 ** (1.0 + 3.0 * commonness)
    hs = 1.0 + 9.0 * commonness
    cf = 10.0 ** (4.0 * commonness) * 5.0
    return gt, hs, cf


def main():
    root = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")
    raw = {u[0]: raw_signals(u[7]) for u in UNITS}
    alpha = (0.3, 0.3, 0.4)
    delta = 0.1
    score = {k: sum(a * math.log(x) for a, x in zip(alpha, v))
             for k, v in raw.items()}
    lo, hi = min(score.values()), max(score.values())

    def freq(uid):
        s = score[uid]
        if s == hi:
            return 1.0
        if s == lo:
            return delta
        return (1 - delta) * (s - lo) / (hi - lo) + delta

    with open(os.path.join(root, "unit_frequency.tsv"), "w", encoding="utf-8") as f:
        f.write("# unit_id\tfreq_gt\tfreq_hs\tfreq_cf\n")
        for uid, (gt, hs, cf) in raw.items():
            f.write(f"{uid}\t{gt!r}\t{hs!r}\t{cf!r}\n")

    with open(os.path.join(root, "units.tsv"), "w", encoding="utf-8") as f:
        f.write("# UnitID\tLabel_zh\tLabel_en\tSymbol\tAlias\tDescription\t"
                "Keywords\tFrequency\tQuantityKind\tDimensionVec\t"
                "ConversionVal\tAffineOffset\n")
        for (uid, zh, en, sym, alias, desc, kw, _c, kind, dim, conv,
             offset) in UNITS:
            fields = [uid, zh, en, sym, alias, desc, kw, repr(freq(uid)), kind,
                      DIM[dim], conv]
            if offset:
                fields.append(offset)
            f.write("\t".join(fields) + "\n")
    print(f"{len(UNITS)} units, {len({u[8] for u in UNITS})} kinds")


if __name__ == "__main__":
    main()
