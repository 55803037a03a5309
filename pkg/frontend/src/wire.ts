/**
 * Binary frame wire format shared with the gateway.
 *
 * Layout: 4-byte magic "AMF1", then width, height and frame index as
 * little-endian u32, then width*height*4 bytes of RGBA, row-major.
 */

export interface DecodedFrame {
  width: number;
  height: number;
  frameIndex: number;
  rgba: Uint8ClampedArray<ArrayBuffer>;
}

// "AMF1" read as a little-endian u32.
export const FRAME_MAGIC = 0x31464d41;
export const HEADER_BYTES = 16;

export class FrameDecodeError extends Error {}

export function decodeFrame(buffer: ArrayBuffer): DecodedFrame {
  if (buffer.byteLength < HEADER_BYTES) {
    throw new FrameDecodeError(`frame message too short: ${buffer.byteLength} bytes`);
  }
  const view = new DataView(buffer);
  const magic = view.getUint32(0, true);
  if (magic !== FRAME_MAGIC) {
    throw new FrameDecodeError(`bad frame magic 0x${magic.toString(16)}`);
  }
  const width = view.getUint32(4, true);
  const height = view.getUint32(8, true);
  const frameIndex = view.getUint32(12, true);
  const expected = HEADER_BYTES + width * height * 4;
  if (buffer.byteLength !== expected) {
    throw new FrameDecodeError(
      `frame payload is ${buffer.byteLength - HEADER_BYTES} bytes, expected ${expected - HEADER_BYTES}`
    );
  }
  return {
    width,
    height,
    frameIndex,
    rgba: new Uint8ClampedArray(buffer, HEADER_BYTES),
  };
}

/** Sample the RGB of one cell from a decoded frame. */
export function pixelAt(frame: DecodedFrame, x: number, y: number): [number, number, number] {
  const offset = (y * frame.width + x) * 4;
  return [frame.rgba[offset] ?? 0, frame.rgba[offset + 1] ?? 0, frame.rgba[offset + 2] ?? 0];
}
