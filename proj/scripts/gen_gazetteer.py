#!/usr/bin/env python3
"""Regenerate data/gazetteer.tsv (normalized place name -> ISO 3166-1
alpha-2 code).

Coverage: every assigned alpha-2 code with its common English name plus
frequent variants, US states (full names, and the subset of postal
abbreviations that are not common English words), and ~300 major world
cities.  Keys are written pre-normalized: lowercase, diacritics folded,
whitespace collapsed.

Ambiguous names are resolved once, in favour of the reading most likely
in a tweet location field, and noted inline:
  - "virgin islands" -> VI ("british virgin islands" -> VG); both codes
    sit in the Irma affected-region set, so the partition is unaffected.
  - "naples" -> US (Florida; "napoli" -> IT), "san jose" -> US,
    "panama city" -> PA, "georgetown" -> GY, "st john's" -> AG.
"""

import sys
import unicodedata
from pathlib import Path

COUNTRIES = {
    "AD": ["andorra"],
    "AE": ["united arab emirates", "uae", "u.a.e."],
    "AF": ["afghanistan"],
    "AG": ["antigua and barbuda", "antigua", "barbuda"],
    "AI": ["anguilla"],
    "AL": ["albania"],
    "AM": ["armenia"],
    "AO": ["angola"],
    "AQ": ["antarctica"],
    "AR": ["argentina"],
    "AS": ["american samoa"],
    "AT": ["austria"],
    "AU": ["australia"],
    "AW": ["aruba"],
    "AX": ["aland islands"],
    "AZ": ["azerbaijan"],
    "BA": ["bosnia and herzegovina", "bosnia"],
    "BB": ["barbados"],
    "BD": ["bangladesh"],
    "BE": ["belgium", "belgique"],
    "BF": ["burkina faso"],
    "BG": ["bulgaria"],
    "BH": ["bahrain"],
    "BI": ["burundi"],
    "BJ": ["benin"],
    "BL": ["saint barthelemy", "st barthelemy", "st. barthelemy", "st barts"],
    "BM": ["bermuda"],
    "BN": ["brunei", "brunei darussalam"],
    "BO": ["bolivia"],
    "BQ": ["bonaire", "sint eustatius", "saba"],
    "BR": ["brazil", "brasil"],
    "BS": ["bahamas", "the bahamas"],
    "BT": ["bhutan"],
    "BV": ["bouvet island"],
    "BW": ["botswana"],
    "BY": ["belarus"],
    "BZ": ["belize"],
    "CA": ["canada"],
    "CC": ["cocos islands", "keeling islands"],
    "CD": ["democratic republic of the congo", "dr congo", "drc", "congo-kinshasa"],
    "CF": ["central african republic"],
    "CG": ["congo", "republic of the congo", "congo-brazzaville"],
    "CH": ["switzerland", "suisse", "schweiz"],
    "CI": ["ivory coast", "cote d'ivoire"],
    "CK": ["cook islands"],
    "CL": ["chile"],
    "CM": ["cameroon"],
    "CN": ["china", "people's republic of china", "prc"],
    "CO": ["colombia"],
    "CR": ["costa rica"],
    "CU": ["cuba"],
    "CV": ["cape verde", "cabo verde"],
    "CW": ["curacao"],
    "CX": ["christmas island"],
    "CY": ["cyprus"],
    "CZ": ["czech republic", "czechia"],
    "DE": ["germany", "deutschland"],
    "DJ": ["djibouti"],
    "DK": ["denmark", "danmark"],
    "DM": ["dominica"],
    "DO": ["dominican republic"],
    "DZ": ["algeria"],
    "EC": ["ecuador"],
    "EE": ["estonia"],
    "EG": ["egypt"],
    "EH": ["western sahara"],
    "ER": ["eritrea"],
    "ES": ["spain", "espana"],
    "ET": ["ethiopia"],
    "FI": ["finland", "suomi"],
    "FJ": ["fiji"],
    "FK": ["falkland islands"],
    "FM": ["micronesia"],
    "FO": ["faroe islands"],
    "FR": ["france"],
    "GA": ["gabon"],
    "GB": ["united kingdom", "uk", "u.k.", "great britain", "britain",
           "england", "scotland", "wales", "northern ireland"],
    "GD": ["grenada"],
    # plain "georgia" resolves to the US state below
    "GE": ["republic of georgia", "sakartvelo", "tbilisi"],
    "GF": ["french guiana"],
    "GG": ["guernsey"],
    "GH": ["ghana"],
    "GI": ["gibraltar"],
    "GL": ["greenland"],
    "GM": ["gambia", "the gambia"],
    "GN": ["guinea"],
    "GP": ["guadeloupe"],
    "GQ": ["equatorial guinea"],
    "GR": ["greece"],
    "GS": ["south georgia"],
    "GT": ["guatemala"],
    "GU": ["guam"],
    "GW": ["guinea-bissau"],
    "GY": ["guyana"],
    "HK": ["hong kong"],
    "HM": ["heard island"],
    "HN": ["honduras"],
    "HR": ["croatia", "hrvatska"],
    "HT": ["haiti"],
    "HU": ["hungary"],
    "ID": ["indonesia"],
    "IE": ["ireland", "republic of ireland", "eire"],
    "IL": ["israel"],
    "IM": ["isle of man"],
    "IN": ["india"],
    "IO": ["british indian ocean territory"],
    "IQ": ["iraq"],
    "IR": ["iran"],
    "IS": ["iceland"],
    "IT": ["italy", "italia"],
    "JE": ["jersey"],
    "JM": ["jamaica"],
    "JO": ["jordan"],
    "JP": ["japan", "nippon"],
    "KE": ["kenya"],
    "KG": ["kyrgyzstan"],
    "KH": ["cambodia"],
    "KI": ["kiribati"],
    "KM": ["comoros"],
    "KN": ["saint kitts and nevis", "st kitts and nevis", "st kitts",
           "saint kitts", "nevis"],
    "KP": ["north korea"],
    "KR": ["south korea", "korea", "republic of korea"],
    "KW": ["kuwait"],
    "KY": ["cayman islands"],
    "KZ": ["kazakhstan"],
    "LA": ["laos"],
    "LB": ["lebanon"],
    "LC": ["saint lucia", "st lucia"],
    "LI": ["liechtenstein"],
    "LK": ["sri lanka"],
    "LR": ["liberia"],
    "LS": ["lesotho"],
    "LT": ["lithuania"],
    "LU": ["luxembourg"],
    "LV": ["latvia"],
    "LY": ["libya"],
    "MA": ["morocco", "maroc"],
    "MC": ["monaco"],
    "MD": ["moldova"],
    "ME": ["montenegro"],
    "MF": ["saint martin", "st martin", "st. martin"],
    "MG": ["madagascar"],
    "MH": ["marshall islands"],
    "MK": ["north macedonia", "macedonia"],
    "ML": ["mali"],
    "MM": ["myanmar", "burma"],
    "MN": ["mongolia"],
    "MO": ["macau", "macao"],
    "MP": ["northern mariana islands"],
    "MQ": ["martinique"],
    "MR": ["mauritania"],
    "MS": ["montserrat"],
    "MT": ["malta"],
    "MU": ["mauritius"],
    "MV": ["maldives"],
    "MW": ["malawi"],
    "MX": ["mexico"],
    "MY": ["malaysia"],
    "MZ": ["mozambique"],
    "NA": ["namibia"],
    "NC": ["new caledonia"],
    "NE": ["niger"],
    "NF": ["norfolk island"],
    "NG": ["nigeria"],
    "NI": ["nicaragua"],
    "NL": ["netherlands", "the netherlands", "holland", "nederland"],
    "NO": ["norway", "norge"],
    "NP": ["nepal"],
    "NR": ["nauru"],
    "NU": ["niue"],
    "NZ": ["new zealand", "aotearoa"],
    "OM": ["oman"],
    "PA": ["panama"],
    "PE": ["peru"],
    "PF": ["french polynesia", "tahiti"],
    "PG": ["papua new guinea"],
    "PH": ["philippines", "the philippines", "pilipinas"],
    "PK": ["pakistan"],
    "PL": ["poland", "polska"],
    "PM": ["saint pierre and miquelon"],
    "PN": ["pitcairn"],
    "PR": ["puerto rico"],
    "PS": ["palestine", "palestinian territory"],
    "PT": ["portugal"],
    "PW": ["palau"],
    "PY": ["paraguay"],
    "QA": ["qatar"],
    "RE": ["reunion"],
    "RO": ["romania"],
    "RS": ["serbia", "srbija"],
    "RU": ["russia", "russian federation"],
    "RW": ["rwanda"],
    "SA": ["saudi arabia", "ksa"],
    "SB": ["solomon islands"],
    "SC": ["seychelles"],
    "SD": ["sudan"],
    "SE": ["sweden", "sverige"],
    "SG": ["singapore"],
    "SH": ["saint helena"],
    "SI": ["slovenia"],
    "SJ": ["svalbard"],
    "SK": ["slovakia"],
    "SL": ["sierra leone"],
    "SM": ["san marino"],
    "SN": ["senegal"],
    "SO": ["somalia"],
    "SR": ["suriname"],
    "SS": ["south sudan"],
    "ST": ["sao tome and principe"],
    "SV": ["el salvador"],
    "SX": ["sint maarten"],
    "SY": ["syria"],
    "SZ": ["eswatini", "swaziland"],
    "TC": ["turks and caicos", "turks and caicos islands", "turks & caicos"],
    "TD": ["chad"],
    "TF": ["french southern territories"],
    "TG": ["togo"],
    "TH": ["thailand"],
    "TJ": ["tajikistan"],
    "TK": ["tokelau"],
    "TL": ["timor-leste", "east timor"],
    "TM": ["turkmenistan"],
    "TN": ["tunisia"],
    "TO": ["tonga"],
    "TR": ["turkey", "turkiye"],
    "TT": ["trinidad and tobago", "trinidad", "tobago"],
    "TV": ["tuvalu"],
    "TW": ["taiwan"],
    "TZ": ["tanzania"],
    "UA": ["ukraine"],
    "UG": ["uganda"],
    "UM": ["us minor outlying islands"],
    "US": ["united states", "united states of america", "usa", "us",
           "u.s.", "u.s.a.", "america", "estados unidos"],
    "UY": ["uruguay"],
    "UZ": ["uzbekistan"],
    "VA": ["vatican", "vatican city", "holy see"],
    "VC": ["saint vincent and the grenadines", "st vincent"],
    "VE": ["venezuela"],
    "VG": ["british virgin islands", "bvi", "tortola"],
    "VI": ["virgin islands", "us virgin islands", "u.s. virgin islands",
           "united states virgin islands"],
    "VN": ["vietnam", "viet nam"],
    "VU": ["vanuatu"],
    "WF": ["wallis and futuna"],
    "WS": ["samoa"],
    "YE": ["yemen"],
    "YT": ["mayotte"],
    "ZA": ["south africa"],
    "ZM": ["zambia"],
    "ZW": ["zimbabwe"],
}

US_STATES = [
    "alabama", "alaska", "arizona", "arkansas", "california", "colorado",
    "connecticut", "delaware", "florida", "georgia", "hawaii", "idaho",
    "illinois", "indiana", "iowa", "kansas", "kentucky", "louisiana",
    "maine", "maryland", "massachusetts", "michigan", "minnesota",
    "mississippi", "missouri", "montana", "nebraska", "nevada",
    "new hampshire", "new jersey", "new mexico", "new york",
    "north carolina", "north dakota", "ohio", "oklahoma", "oregon",
    "pennsylvania", "rhode island", "south carolina", "south dakota",
    "tennessee", "texas", "utah", "vermont", "virginia", "washington",
    "west virginia", "wisconsin", "wyoming", "district of columbia",
]

# Postal abbreviations that are not common English words and do not
# collide with another entry in this file.
US_STATE_ABBREVS = [
    "ak", "az", "ct", "dc", "fl", "ia", "il", "ks", "ky", "md", "mi",
    "mn", "mt", "nc", "nd", "nh", "nj", "nm", "nv", "ny", "ri", "sc",
    "sd", "tn", "tx", "ut", "vt", "wa", "wi", "wv", "wy",
]

CITIES = {
    # Irma-relevant (Caribbean and Florida)
    "miami": "US", "miami beach": "US", "orlando": "US", "tampa": "US",
    "jacksonville": "US", "key west": "US", "naples": "US",
    "fort lauderdale": "US", "fort myers": "US", "west palm beach": "US",
    "st petersburg": "US", "st. petersburg": "US", "tallahassee": "US",
    "napoli": "IT", "saint petersburg": "RU",
    "san juan": "PR", "ponce": "PR", "havana": "CU", "la habana": "CU",
    "santiago de cuba": "CU", "port-au-prince": "HT", "port au prince": "HT",
    "santo domingo": "DO", "punta cana": "DO", "nassau": "BS",
    "charlotte amalie": "VI", "road town": "VG", "basseterre": "KN",
    "marigot": "MF", "gustavia": "BL", "the valley": "AI",
    "cockburn town": "TC", "providenciales": "TC", "st john's": "AG",
    "st johns": "AG", "bridgetown": "BB", "kingston": "JM",
    "montego bay": "JM", "port of spain": "TT", "georgetown": "GY",
    "castries": "LC", "roseau": "DM", "st george's": "GD",
    "oranjestad": "AW", "willemstad": "CW", "philipsburg": "SX",
    "hamilton": "BM", "george town": "KY",
    # France and Europe
    "paris": "FR", "marseille": "FR", "lyon": "FR", "toulouse": "FR",
    "nice": "FR", "nantes": "FR", "bordeaux": "FR", "lille": "FR",
    "strasbourg": "FR", "montpellier": "FR", "rennes": "FR",
    "london": "GB", "manchester": "GB", "birmingham": "GB",
    "liverpool": "GB", "leeds": "GB", "glasgow": "GB", "edinburgh": "GB",
    "cardiff": "GB", "belfast": "GB", "dublin": "IE", "cork": "IE",
    "madrid": "ES", "barcelona": "ES", "valencia": "ES", "seville": "ES",
    "bilbao": "ES", "lisbon": "PT", "porto": "PT", "rome": "IT",
    "roma": "IT", "milan": "IT", "milano": "IT", "turin": "IT",
    "venice": "IT", "florence": "IT", "berlin": "DE", "munich": "DE",
    "hamburg": "DE", "frankfurt": "DE", "cologne": "DE", "stuttgart": "DE",
    "dusseldorf": "DE", "vienna": "AT", "zurich": "CH", "geneva": "CH",
    "basel": "CH", "amsterdam": "NL", "rotterdam": "NL", "the hague": "NL",
    "brussels": "BE", "antwerp": "BE", "stockholm": "SE", "gothenburg": "SE",
    "oslo": "NO", "copenhagen": "DK", "helsinki": "FI", "warsaw": "PL",
    "krakow": "PL", "prague": "CZ", "budapest": "HU", "bucharest": "RO",
    "sofia": "BG", "athens": "GR", "thessaloniki": "GR", "zagreb": "HR",
    "belgrade": "RS", "istanbul": "TR", "ankara": "TR", "izmir": "TR",
    "moscow": "RU", "kyiv": "UA", "kiev": "UA", "minsk": "BY",
    "reykjavik": "IS",
    # Middle East and Africa
    "dubai": "AE", "abu dhabi": "AE", "sharjah": "AE", "doha": "QA",
    "riyadh": "SA", "jeddah": "SA", "mecca": "SA", "kuwait city": "KW",
    "manama": "BH", "muscat": "OM", "tel aviv": "IL", "jerusalem": "IL",
    "amman": "JO", "beirut": "LB", "damascus": "SY", "baghdad": "IQ",
    "tehran": "IR", "cairo": "EG", "alexandria": "EG", "casablanca": "MA",
    "rabat": "MA", "marrakech": "MA", "tunis": "TN", "algiers": "DZ",
    "tripoli": "LY", "lagos": "NG", "abuja": "NG", "kano": "NG",
    "accra": "GH", "nairobi": "KE", "mombasa": "KE", "kampala": "UG",
    "dar es salaam": "TZ", "addis ababa": "ET", "johannesburg": "ZA",
    "cape town": "ZA", "durban": "ZA", "pretoria": "ZA", "dakar": "SN",
    "abidjan": "CI", "kinshasa": "CD", "luanda": "AO", "harare": "ZW",
    "lusaka": "ZM",
    # Asia and Oceania
    "mumbai": "IN", "delhi": "IN", "new delhi": "IN", "bangalore": "IN",
    "bengaluru": "IN", "chennai": "IN", "kolkata": "IN", "hyderabad": "IN",
    "pune": "IN", "ahmedabad": "IN", "jaipur": "IN", "karachi": "PK",
    "lahore": "PK", "islamabad": "PK", "dhaka": "BD", "chittagong": "BD",
    "colombo": "LK", "kathmandu": "NP", "kabul": "AF", "tokyo": "JP",
    "osaka": "JP", "kyoto": "JP", "yokohama": "JP", "nagoya": "JP",
    "seoul": "KR", "busan": "KR", "incheon": "KR", "beijing": "CN",
    "shanghai": "CN", "shenzhen": "CN", "guangzhou": "CN", "chengdu": "CN",
    "wuhan": "CN", "taipei": "TW", "kaohsiung": "TW", "manila": "PH",
    "quezon city": "PH", "cebu": "PH", "jakarta": "ID", "surabaya": "ID",
    "bandung": "ID", "bali": "ID", "kuala lumpur": "MY", "penang": "MY",
    "bangkok": "TH", "chiang mai": "TH", "hanoi": "VN",
    "ho chi minh city": "VN", "saigon": "VN", "phnom penh": "KH",
    "yangon": "MM", "sydney": "AU", "melbourne": "AU", "brisbane": "AU",
    "perth": "AU", "adelaide": "AU", "canberra": "AU", "auckland": "NZ",
    "wellington": "NZ", "christchurch": "NZ", "suva": "FJ",
    # Americas
    "new york": "US", "new york city": "US", "nyc": "US", "brooklyn": "US",
    "manhattan": "US", "queens": "US", "bronx": "US", "staten island": "US",
    "los angeles": "US", "chicago": "US", "houston": "US", "phoenix": "US",
    "philadelphia": "US", "san antonio": "US", "san diego": "US",
    "dallas": "US", "austin": "US", "san francisco": "US", "seattle": "US",
    "denver": "US", "boston": "US", "atlanta": "US", "las vegas": "US",
    "portland": "US", "detroit": "US", "memphis": "US", "baltimore": "US",
    "washington dc": "US", "washington d.c.": "US", "nashville": "US",
    "milwaukee": "US", "charlotte": "US", "columbus": "US",
    "indianapolis": "US", "fort worth": "US", "el paso": "US",
    "oklahoma city": "US", "new orleans": "US", "minneapolis": "US",
    "st louis": "US", "st. louis": "US", "pittsburgh": "US",
    "cincinnati": "US", "kansas city": "US", "cleveland": "US",
    "sacramento": "US", "raleigh": "US", "virginia beach": "US",
    "tucson": "US", "fresno": "US", "omaha": "US", "oakland": "US",
    "tulsa": "US", "honolulu": "US", "anchorage": "US", "san jose": "US",
    "salt lake city": "US", "buffalo": "US", "richmond": "US",
    "louisville": "US", "albuquerque": "US", "toronto": "CA",
    "montreal": "CA", "vancouver": "CA", "ottawa": "CA", "calgary": "CA",
    "edmonton": "CA", "winnipeg": "CA", "quebec city": "CA",
    "halifax": "CA", "mexico city": "MX", "ciudad de mexico": "MX",
    "guadalajara": "MX", "monterrey": "MX", "cancun": "MX",
    "tijuana": "MX", "guatemala city": "GT", "san salvador": "SV",
    "tegucigalpa": "HN", "managua": "NI", "panama city": "PA",
    "bogota": "CO", "medellin": "CO", "cali": "CO", "caracas": "VE",
    "maracaibo": "VE", "quito": "EC", "guayaquil": "EC", "lima": "PE",
    "la paz": "BO", "santiago": "CL", "valparaiso": "CL",
    "buenos aires": "AR", "cordoba": "AR", "rosario": "AR",
    "montevideo": "UY", "asuncion": "PY", "brasilia": "BR",
    "sao paulo": "BR", "rio de janeiro": "BR", "rio": "BR",
    "salvador": "BR", "recife": "BR", "fortaleza": "BR",
    "belo horizonte": "BR", "curitiba": "BR", "manaus": "BR",
}


def fold(name: str) -> str:
    d = unicodedata.normalize("NFD", name)
    stripped = "".join(c for c in d if not unicodedata.category(c).startswith("M"))
    return " ".join(stripped.lower().split())


def main():
    root = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent
    out = root / "data" / "gazetteer.tsv"
    out.parent.mkdir(parents=True, exist_ok=True)

    entries = {}

    def put(name, code):
        key = fold(name)
        assert key, name
        assert key not in entries or entries[key] == code, \
            f"duplicate key {key!r}: {entries[key]} vs {code}"
        entries[key] = code

    for code, names in COUNTRIES.items():
        for n in names:
            put(n, code)
    for n in US_STATES:
        put(n, "US")
    for n in US_STATE_ABBREVS:
        put(n, "US")
    for n, code in CITIES.items():
        put(n, code)

    with out.open("w") as f:
        f.write("# name\tcountry_code\n")
        for k in sorted(entries):
            f.write(f"{k}\t{entries[k]}\n")
    print(f"wrote {out}: {len(entries)} entries")


if __name__ == "__main__":
    main()
