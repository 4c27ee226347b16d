"""Independent oracle for the ISO-15919 golden corpus.

Derives each codepoint's romanisation from its Unicode character name (not
from block offsets or the crate's tables), applies the inherent-vowel rule,
and writes `tests/data/golden/<script>.tsv` (word TAB expected). Run once;
the outputs are frozen test data.

    pip install unicodedata2
    python3 tests/oracle/golden_translit.py
"""
import os
import random
import unicodedata

import unicodedata2 as ud

SCRIPTS = {
    'devanagari': ('DEVANAGARI', 0x900), 'bengali': ('BENGALI', 0x980),
    'gujarati': ('GUJARATI', 0xA80), 'tamil': ('TAMIL', 0xB80),
    'telugu': ('TELUGU', 0xC00), 'kannada': ('KANNADA', 0xC80),
    'malayalam': ('MALAYALAM', 0xD00),
}

CONSONANTS = {
    'KA': 'k', 'KHA': 'kh', 'GA': 'g', 'GHA': 'gh', 'NGA': 'ṅ', 'CA': 'c', 'CHA': 'ch',
    'JA': 'j', 'JHA': 'jh', 'NYA': 'ñ', 'TTA': 'ṭ', 'TTHA': 'ṭh', 'DDA': 'ḍ', 'DDHA': 'ḍh',
    'NNA': 'ṇ', 'TA': 't', 'THA': 'th', 'DA': 'd', 'DHA': 'dh', 'NA': 'n', 'NNNA': 'ṉ',
    'PA': 'p', 'PHA': 'ph', 'BA': 'b', 'BHA': 'bh', 'MA': 'm', 'YA': 'y', 'RA': 'r',
    'RRA': 'ṟ', 'LA': 'l', 'LLA': 'ḷ', 'LLLA': 'ḻ', 'VA': 'v', 'SHA': 'ś', 'SSA': 'ṣ',
    'SA': 's', 'HA': 'h', 'QA': 'q', 'KHHA': 'ḵẖ', 'GHHA': 'ġ', 'ZA': 'z', 'DDDHA': 'ṛ',
    'RHA': 'ṛh', 'FA': 'f', 'YYA': 'ẏ', 'TTTA': 'ṯ',
}
# Unicode names that do not describe the letter's sound.
NAME_FIXES = {0x09DC: 'DDDHA', 0x0CDE: 'LLLA', 0x09F0: 'RA', 0x09F1: 'VA'}
NUKTA_FORMS = {'KA': 'q', 'KHA': 'ḵẖ', 'GA': 'ġ', 'JA': 'z', 'DDA': 'ṛ', 'DDHA': 'ṛh', 'PHA': 'f', 'YA': 'ẏ'}
VOWELS_SHORT_LONG = {'A': 'a', 'AA': 'ā', 'I': 'i', 'II': 'ī', 'U': 'u', 'UU': 'ū',
                     'VOCALIC R': 'r̥', 'VOCALIC RR': 'r̥̄', 'VOCALIC L': 'l̥', 'VOCALIC LL': 'l̥̄',
                     'AI': 'ai', 'AU': 'au', 'CANDRA E': 'ê', 'CANDRA O': 'ô',
                     'SHORT E': 'e', 'SHORT O': 'o', 'EE': 'ē', 'OO': 'ō'}
DIGITS = ['ZERO', 'ONE', 'TWO', 'THREE', 'FOUR', 'FIVE', 'SIX', 'SEVEN', 'EIGHT', 'NINE']
CHILLU = {'NN': 'ṇ', 'N': 'n', 'RR': 'r', 'L': 'l', 'LL': 'ḷ', 'K': 'k', 'M': 'm', 'Y': 'y', 'LLL': 'ḻ'}


def has_long_e(prefix, base):
    return any(ud.name(chr(cp), '') == f'{prefix} LETTER EE' for cp in range(base, base + 0x80))


def vowel(prefix, base, key):
    if key in ('E', 'O'):
        # where a separate EE/OO exists, plain E/O is the short vowel
        return key.lower() if has_long_e(prefix, base) else {'E': 'ē', 'O': 'ō'}[key]
    return VOWELS_SHORT_LONG.get(key)


def describe(prefix, base, c):
    """(kind, latin) for one codepoint; kind in C V X N M."""
    cp = ord(c)
    name = NAME_FIXES.get(cp) or ud.name(c)
    rest = name[len(prefix) + 1:] if name.startswith(prefix + ' ') else name
    if cp == 0x0B83:
        return 'N', 'ḵ'  # named SIGN VISARGA; the Tamil aytham
    if cp in NAME_FIXES:
        return 'C', CONSONANTS[name]
    if rest.startswith('LETTER CHILLU '):
        return 'N', CHILLU[rest[len('LETTER CHILLU '):]]
    if rest == 'LETTER KHANDA TA':
        return 'N', 't'
    if rest == 'LETTER NAKAARA POLLU':
        return 'N', 'n'
    if rest.startswith('LETTER '):
        key = rest[len('LETTER '):]
        if key in CONSONANTS:
            return 'C', CONSONANTS[key]
        v = vowel(prefix, base, key)
        if v:
            return 'N', v
    if rest.startswith('VOWEL SIGN '):
        v = vowel(prefix, base, rest[len('VOWEL SIGN '):])
        if v:
            return 'V', v
    if rest.startswith('DIGIT '):
        return 'N', str(DIGITS.index(rest[len('DIGIT '):]))
    simple = {
        'SIGN VIRAMA': ('X', ''), 'SIGN VERTICAL BAR VIRAMA': ('X', ''),
        'SIGN CIRCULAR VIRAMA': ('X', ''), 'SIGN NUKTA': ('M', ''),
        'SIGN ANUSVARA': ('N', 'ṁ'), 'SIGN VISARGA': ('N', 'ḥ'),
        'SIGN CANDRABINDU': ('N', 'm̐'), 'SIGN AVAGRAHA': ('N', "'"), 'SIGN AYTHAM': ('N', 'ḵ'),
        'DANDA': ('N', '.'), 'DOUBLE DANDA': ('N', '.'), 'OM': ('N', 'ōṁ'),
        'AU LENGTH MARK': ('V', 'au'), 'AI LENGTH MARK': ('V', 'ai'), 'LENGTH MARK': ('M', ''),
        'SIGN DOT REPH': ('N', 'r'),
        'VOWEL CANDRA E': ('N', 'ê'), 'VOWEL CANDRA O': ('N', 'ô'),
    }
    if rest in simple:
        return simple[rest]
    raise KeyError(f'{name} (U+{cp:04X})')


def oracle(script, word):
    prefix, base = SCRIPTS[script]
    chars = [c for c in unicodedata.normalize('NFC', word) if c not in '‌‍']
    units = []
    i = 0
    while i < len(chars):
        kind, latin = describe(prefix, base, chars[i])
        nxt = chars[i + 1] if i + 1 < len(chars) else None
        if kind == 'C' and nxt and ud.name(nxt, '').endswith('SIGN NUKTA'):
            key = ud.name(chars[i])[len(prefix) + len(' LETTER '):]
            if key in NUKTA_FORMS and ord(chars[i]) not in NAME_FIXES:
                latin = NUKTA_FORMS[key]
                i += 1
        units.append((kind, latin))
        i += 1
    out = []
    for idx, (kind, latin) in enumerate(units):
        out.append(latin)
        if kind == 'C':
            follow = next((k for k, _ in units[idx + 1:] if k != 'M'), None)
            if follow not in ('V', 'X'):
                out.append('a')
    return unicodedata.normalize('NFC', ''.join(out))


REAL_WORDS = {
    'devanagari': 'नमस्ते हिन्दी भारत कृष्ण ज़िंदगी पढ़ाई दुःख संस्कृत चाँद ऑफ़िस क्षत्रिय ज्ञान श्री प्रश्न विद्यालय ॐ हँसना ऋषि सड़क फ़ोन कमल क़लम ख़ुद ग़लत य़ ऍ १९५०',
    'bengali': 'বাংলা কলকাতা রবীন্দ্রনাথ ভালোবাসা আমি তুমি বড় আষাঢ় যায় উৎসব ক্ষমা দুঃখ চাঁদ শ্রী মৌমাছি ৰ ৱ ১২৩',
    'gujarati': 'ગુજરાતી અમદાવાદ નમસ્તે ભાષા શ્રી કૃષ્ણ મહાત્મા ગાંધી દુઃખ વાળ ઑફિસ ૐ ૧૨',
    'tamil': 'தமிழ் வணக்கம் நன்றி சென்னை பழம் கற்க அம்மா ஆறு எட்டு ஒன்பது ஃபோன் ஸ்ரீ ஜன்னல் பௌர்ணமி கொடு கோயில் ௐ ௨௦',
    'telugu': 'నమస్కారం తెలుగు నేను ఇవాళ బాగున్నాను మంచి ఇచ్చారు హైదరాబాదు పుస్తకం కృష్ణ శ్రీ క్షమ ఒకటి ఎనిమిది తొమ్మిది ఱెక్క దుఃఖం ౧౦',
    'kannada': 'ಕನ್ನಡ ಬೆಂಗಳೂರು ನಮಸ್ಕಾರ ಕರ್ನಾಟಕ ಹೊಸ ಮೈಸೂರು ಕೃಷ್ಣ ಶ್ರೀ ದುಃಖ ಬಾಳೆ ಕೋಳಿ ಕೀರ್ತಿ ೞ ೧೦',
    'malayalam': 'മലയാളം കേരളം നമസ്കാരം അവൻ കൊച്ചി തിരുവനന്തപുരം പൂവ് മഴ കാറ്റ് ഗൗരി കൗമാരം ശ്രീ അവൾ പാൽ കാർ ൿ ൦൯',
}


def inventory(script):
    prefix, base = SCRIPTS[script]
    inv = {'C': [], 'V': [], 'N': [], 'D': [], 'vowel': []}
    nukta = None
    for cp in range(base, base + 0x80):
        c = chr(cp)
        name = ud.name(c, '')
        if not name:
            continue
        try:
            kind, latin = describe(prefix, base, c)
        except (KeyError, ValueError):
            continue
        if unicodedata.normalize('NFC', c) != c:
            continue
        if kind == 'C':
            inv['C'].append(c)
        elif kind == 'V' and 'LENGTH MARK' not in name:
            inv['V'].append(c)
        elif name.endswith('SIGN NUKTA'):
            nukta = c
        elif 'DIGIT' in name:
            inv['D'].append(c)
        elif kind == 'N' and name.startswith(prefix + ' LETTER') and 'CHILLU' not in name and 'POLLU' not in name and 'KHANDA' not in name:
            inv['vowel'].append(c)
        elif kind == 'N' and ('ANUSVARA' in name or 'VISARGA' in name or 'CANDRABINDU' in name or 'CHILLU' in name):
            inv['N'].append(c)
    return inv, nukta, prefix


def pseudo_word(rng, script):
    inv, nukta, prefix = inventory(script)
    virama = next(chr(cp) for cp in range(SCRIPTS[script][1], SCRIPTS[script][1] + 0x80)
                  if ud.name(chr(cp), '').endswith('SIGN VIRAMA'))
    if rng.random() < 0.05:
        return ''.join(rng.choice(inv['D']) for _ in range(rng.randint(1, 4)))
    word = ''
    if rng.random() < 0.25:
        word += rng.choice(inv['vowel'])
    for _ in range(rng.randint(1, 4)):
        cons = rng.choice(inv['C'])
        if nukta and rng.random() < 0.08:
            cons += nukta
        if rng.random() < 0.2:
            cons += virama + rng.choice(inv['C'])
        word += cons
        r = rng.random()
        if r < 0.6:
            word += rng.choice(inv['V'])
        elif r < 0.7:
            word += virama
        if inv['N'] and rng.random() < 0.12:
            word += rng.choice(inv['N'])
    return word


def main():
    out_dir = os.path.join(os.path.dirname(__file__), '..', 'data', 'golden')
    rng = random.Random(15919)
    for script in SCRIPTS:
        words = []
        for w in REAL_WORDS[script].split():
            if w not in words:
                words.append(w)
        while len(words) < 200:
            w = pseudo_word(rng, script)
            if w not in words:
                words.append(w)
        lines = [f'{w}\t{oracle(script, w)}' for w in words]
        with open(os.path.join(out_dir, f'{script}.tsv'), 'w', encoding='utf-8') as f:
            f.write('\n'.join(lines) + '\n')


if __name__ == '__main__':
    main()
