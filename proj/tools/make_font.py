#!/usr/bin/env python3
"""Rasterizes DejaVu Sans into the binary bitmap-font asset used by the renderer.

Glyphs are rendered without anti-aliasing (PIL mode "1") for printable ASCII
at four pixel sizes. Layout (little-endian, all fields unsigned unless noted):

    "FQAF"  u8 version  u8 size_count
    per size:  u8 pixel_size  u8 line_height  u8 ascent
      per glyph 0x20..0x7E:
        u8 advance  u8 width  u8 height  i8 x_offset  i8 y_offset
        ceil(width*height/8) bytes, row-major bits, MSB first

y_offset is measured from the top of the line box.
"""
import argparse
import struct

from PIL import Image, ImageDraw, ImageFont

SIZES = (10, 12, 14, 16)


def glyph_record(font, ch):
    left, top, right, bottom = font.getbbox(ch)
    advance = int(round(font.getlength(ch)))
    w, h = max(0, right - left), max(0, bottom - top)
    if w == 0 or h == 0:
        return struct.pack("<BBBbb", advance, 0, 0, 0, 0)
    img = Image.new("1", (right + 2, bottom + 2), 0)
    draw = ImageDraw.Draw(img)
    draw.fontmode = "1"
    draw.text((0, 0), ch, font=font, fill=1)
    crop = img.crop((left, top, right, bottom))
    bits = bytearray((w * h + 7) // 8)
    for y in range(h):
        for x in range(w):
            if crop.getpixel((x, y)):
                k = y * w + x
                bits[k >> 3] |= 0x80 >> (k & 7)
    return struct.pack("<BBBbb", advance, w, h, left, top) + bytes(bits)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("ttf")
    ap.add_argument("out")
    args = ap.parse_args()
    blob = bytearray(b"FQAF") + struct.pack("<BB", 1, len(SIZES))
    for size in SIZES:
        font = ImageFont.truetype(args.ttf, size)
        ascent, descent = font.getmetrics()
        blob += struct.pack("<BBB", size, ascent + descent, ascent)
        for code in range(0x20, 0x7F):
            blob += glyph_record(font, chr(code))
    with open(args.out, "wb") as f:
        f.write(blob)


if __name__ == "__main__":
    main()
